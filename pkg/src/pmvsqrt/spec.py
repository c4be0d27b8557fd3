"""JSON spec files describing algebras.

A spec is a tree such as::

    {"kind": "gamma", "group": {"kind": "cocycle_q4"}, "unit": [1, 0, 0, 0]}

Algebra kinds: ``mv_chain`` (``n``), ``boolean`` (``n``), ``gamma``
(``group``, ``unit``), ``product`` (``factors``), ``interval`` (``base``,
``a``), ``quotient`` (``base``, ``ideal``) and ``table`` (``elements``,
``oplus``, ``minus``, ``sim``, ``zero``, ``one``).  Group kinds:
``int_vector`` and ``rat_vector`` (``dims``, ``order``), ``cocycle_q4``
and ``lex_pair`` (``h``, ``g``).

Rationals are integers or ``"p/q"`` strings; JSON floats are rejected.
Errors carry the line and column of the offending node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from json.scanner import py_make_scanner

from .algebra import (
    AlgebraError, FiniteTable, Gamma, Interval, Product, boolean_cube, check_axioms, mv_chain,
)
from .groups import CocycleQ4, IntVector, LexPair, RatVector, UnitalGroup
from .rational import RationalFormatError, format_rational, parse_rational

CORPUS = ("chain4", "boolean2", "ratchain", "cocycle", "lexpair", "mixed-product", "prop862")


class SpecError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)
        self.message = message
        self.line = line
        self.col = col


# -- position-tracking JSON -------------------------------------------------------------

@dataclass
class Node:
    value: object
    pos: int


class _Float:
    def __init__(self, text):
        self.text = text


class _Decoder(json.JSONDecoder):
    """Wraps every decoded value in a :class:`Node` carrying its offset."""

    def __init__(self):
        super().__init__(parse_float=_Float, strict=True)
        base_object, base_array = self.parse_object, self.parse_array

        def wrapped(s, idx):
            value, end = inner(s, idx)
            return (value if isinstance(value, Node) else Node(value, idx)), end

        def parse_object(s_and_end, strict, _scan, *rest):
            s, end = s_and_end
            value, new_end = base_object(s_and_end, strict, wrapped, *rest)
            return Node(value, end - 1), new_end

        def parse_array(s_and_end, _scan):
            s, end = s_and_end
            value, new_end = base_array(s_and_end, wrapped)
            return Node(value, end - 1), new_end

        self.parse_object = parse_object
        self.parse_array = parse_array
        self.memo = {}
        inner = py_make_scanner(self)
        self.scan_once = wrapped


class _Ctx:
    def __init__(self, text: str):
        self.text = text

    def error(self, node: Node | None, message: str) -> SpecError:
        if node is None:
            return SpecError(message)
        pos = node.pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return SpecError(message, line, col)


def _load(text: str) -> Node:
    try:
        return _Decoder().decode(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, exc.lineno, exc.colno) from None


# -- tree validation ----------------------------------------------------------------------

def _obj(ctx, node, what, required, optional=()):
    if not isinstance(node.value, dict):
        raise ctx.error(node, f"{what} must be an object")
    d = node.value
    if "kind" not in d:
        raise ctx.error(node, f"{what} needs a \"kind\"")
    for key in d:
        if key != "kind" and key not in required and key not in optional:
            raise ctx.error(node, f"unexpected key {key!r} in {d['kind'].value!r}")
    for key in required:
        if key not in d:
            raise ctx.error(node, f"missing key {key!r} in {d['kind'].value!r}")
    return d


def _int(ctx, node, name, minimum=None):
    v = node.value
    if isinstance(v, bool) or not isinstance(v, int):
        raise ctx.error(node, f"{name} must be an integer")
    if minimum is not None and v < minimum:
        raise ctx.error(node, f"{name} must be ≥ {minimum}")
    return v


def _rational(ctx, node):
    v = node.value
    if isinstance(v, _Float):
        raise ctx.error(node, f"float {v.text} is not allowed; write rationals as \"p/q\"")
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ctx.error(node, "expected an integer or a \"p/q\" string")
    try:
        return parse_rational(v)
    except RationalFormatError as exc:
        raise ctx.error(node, str(exc)) from None


def _literal(ctx, node):
    """Element literal: rational scalar or (nested) list of them."""
    if isinstance(node.value, list):
        return [_literal(ctx, n) for n in node.value]
    return format_rational(_rational(ctx, node))


def _kind(ctx, node, what, kinds):
    d = node.value if isinstance(node.value, dict) else None
    if d is None:
        raise ctx.error(node, f"{what} must be an object")
    k = d.get("kind")
    if k is None:
        raise ctx.error(node, f"{what} needs a \"kind\"")
    if k.value not in kinds:
        raise ctx.error(k, f"unknown {what} kind {k.value!r}; expected one of {', '.join(kinds)}")
    return k.value


_GROUP_KINDS = ("int_vector", "rat_vector", "cocycle_q4", "lex_pair")
_ALGEBRA_KINDS = ("mv_chain", "boolean", "gamma", "product", "interval", "quotient", "table")


def _group_tree(ctx, node) -> dict:
    kind = _kind(ctx, node, "group", _GROUP_KINDS)
    if kind in ("int_vector", "rat_vector"):
        d = _obj(ctx, node, "group", (), ("dims", "order"))
        dims = _int(ctx, d["dims"], "dims", 0) if "dims" in d else 1
        order = "product"
        if "order" in d:
            order = d["order"].value
            if order not in ("product", "lex"):
                raise ctx.error(d["order"], f"order must be \"product\" or \"lex\", got {order!r}")
        return {"kind": kind, "dims": dims, "order": order}
    if kind == "cocycle_q4":
        _obj(ctx, node, "group", ())
        return {"kind": kind}
    d = _obj(ctx, node, "group", ("h", "g"))
    return {"kind": kind, "h": _group_tree(ctx, d["h"]), "g": _group_tree(ctx, d["g"])}


def _tree(ctx, node) -> dict:
    kind = _kind(ctx, node, "algebra", _ALGEBRA_KINDS)
    if kind in ("mv_chain", "boolean"):
        d = _obj(ctx, node, "algebra", ("n",))
        return {"kind": kind, "n": _int(ctx, d["n"], "n", 0)}
    if kind == "gamma":
        d = _obj(ctx, node, "algebra", ("group", "unit"))
        return {"kind": kind, "group": _group_tree(ctx, d["group"]), "unit": _literal(ctx, d["unit"])}
    if kind == "product":
        d = _obj(ctx, node, "algebra", ("factors",))
        if not isinstance(d["factors"].value, list) or not d["factors"].value:
            raise ctx.error(d["factors"], "factors must be a non-empty list")
        return {"kind": kind, "factors": [_tree(ctx, f) for f in d["factors"].value]}
    if kind == "interval":
        d = _obj(ctx, node, "algebra", ("base", "a"))
        return {"kind": kind, "base": _tree(ctx, d["base"]), "a": _literal(ctx, d["a"])}
    if kind == "quotient":
        d = _obj(ctx, node, "algebra", ("base", "ideal"))
        if not isinstance(d["ideal"].value, list):
            raise ctx.error(d["ideal"], "ideal must be a list of elements")
        return {"kind": kind, "base": _tree(ctx, d["base"]),
                "ideal": [_literal(ctx, x) for x in d["ideal"].value]}
    d = _obj(ctx, node, "algebra", ("elements", "oplus", "minus", "sim", "zero", "one"))
    els = d["elements"]
    if not isinstance(els.value, list) or not els.value:
        raise ctx.error(els, "elements must be a non-empty list of names")
    names = []
    for e in els.value:
        if not isinstance(e.value, str):
            raise ctx.error(e, "element names must be strings")
        names.append(e.value)
    n = len(names)

    def index(node_):
        return _int(ctx, node_, "table entry", 0)

    def row(node_, length):
        if not isinstance(node_.value, list) or len(node_.value) != length:
            raise ctx.error(node_, f"expected a list of {length} entries")
        return [index(x) for x in node_.value]

    oplus = d["oplus"]
    if not isinstance(oplus.value, list) or len(oplus.value) != n:
        raise ctx.error(oplus, f"oplus must have {n} rows")
    return {"kind": "table", "elements": names,
            "oplus": [row(r, n) for r in oplus.value],
            "minus": row(d["minus"], n), "sim": row(d["sim"], n),
            "zero": index(d["zero"]), "one": index(d["one"])}


# -- building -------------------------------------------------------------------------------

def build_group(tree: dict):
    kind = tree["kind"]
    if kind == "int_vector":
        return IntVector(tree["dims"], tree["order"])
    if kind == "rat_vector":
        return RatVector(tree["dims"], tree["order"])
    if kind == "cocycle_q4":
        return CocycleQ4()
    return LexPair(build_group(tree["h"]), build_group(tree["g"]))


def _as_list(lit):
    return lit if isinstance(lit, list) else [lit]


def build_algebra(tree: dict):
    kind = tree["kind"]
    if kind == "mv_chain":
        return mv_chain(tree["n"])
    if kind == "boolean":
        return boolean_cube(tree["n"])
    if kind == "gamma":
        return Gamma(UnitalGroup(build_group(tree["group"]), tuple(_as_list(tree["unit"]))))
    if kind == "product":
        return Product([build_algebra(f) for f in tree["factors"]])
    if kind == "interval":
        base = build_algebra(tree["base"])
        return Interval(base, base.parse(tree["a"]))
    if kind == "quotient":
        from .ideals import quotient_algebra
        base = build_algebra(tree["base"])
        return quotient_algebra(base, [base.parse(x) for x in tree["ideal"]])
    T = FiniteTable(tree["elements"], tree["oplus"], tree["minus"], tree["sim"],
                    tree["zero"], tree["one"])
    return T


@dataclass
class AlgebraSpec:
    tree: dict

    @property
    def algebra(self):
        cached = self.__dict__.get("_algebra")
        if cached is None:
            cached = build_algebra(self.tree)
            self._algebra = cached
        return cached


def parse_spec(text: str) -> AlgebraSpec:
    """Parse and build; semantic errors carry the position of the offending node."""
    ctx = _Ctx(text)
    root = _load(text)
    spec = AlgebraSpec(_tree(ctx, root))
    try:
        spec.algebra
    except (AlgebraError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise _locate(ctx, root, exc) from None
    return spec


def _locate(ctx, root, exc) -> SpecError:
    """Attach a position to a construction error: the innermost node it concerns."""
    node = root
    d = root.value
    for key in ("unit", "a", "ideal", "oplus"):
        if isinstance(d, dict) and key in d:
            node = d[key]
            break
    return ctx.error(node, str(exc))


def print_spec(spec: AlgebraSpec | dict) -> str:
    tree = spec.tree if isinstance(spec, AlgebraSpec) else spec
    return json.dumps(tree, ensure_ascii=False)


def load_spec(arg: str) -> AlgebraSpec:
    """Inline JSON, a corpus name, or a path to a spec file."""
    text = arg.strip()
    if text.startswith("{"):
        return parse_spec(arg)
    if arg in CORPUS:
        return parse_spec(corpus_text(arg))
    try:
        with open(arg, encoding="utf-8") as fh:
            return parse_spec(fh.read())
    except OSError as exc:
        raise SpecError(f"cannot read {arg}: {exc.strerror}") from None


def corpus_text(name: str) -> str:
    if name not in CORPUS:
        raise SpecError(f"unknown corpus entry {name!r}")
    return resources.files("pmvsqrt").joinpath("corpus", name + ".json").read_text("utf-8")


def corpus() -> dict[str, AlgebraSpec]:
    return {name: parse_spec(corpus_text(name)) for name in CORPUS}


def parse_element(M, text: str):
    """Element literal given as JSON text, e.g. ``"1/2"`` or ``[0, "3/4"]``."""
    ctx = _Ctx(text)
    try:
        node = _load(text)
    except SpecError:
        node = Node(text.strip(), 0)  # bare p/q without quotes
    lit = _literal(ctx, node)
    try:
        return M.parse(lit)
    except (AlgebraError, ValueError) as exc:
        raise SpecError(str(exc)) from None


def validate(spec: AlgebraSpec):
    return check_axioms(spec.algebra)
