"""Machine-readable results of property checks."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SAMPLED_PASS = "sampled-pass"


@dataclass
class Counterexample:
    property: str
    args: tuple
    trace: dict
    shown_args: list
    shown_trace: dict

    def to_dict(self) -> dict:
        return {"property": self.property, "args": self.shown_args, "trace": self.shown_trace}

    def __str__(self) -> str:
        args = ", ".join(self.shown_args)
        trace = ", ".join(f"{k}={v}" for k, v in self.shown_trace.items())
        return f"{self.property} at ({args})" + (f": {trace}" if trace else "")


@dataclass
class SuiteReport:
    """Outcome of one property or of a named group of properties.

    ``status`` is ``pass`` for exhaustive success, ``sampled-pass`` when at
    least one check ran on a sample, ``fail`` otherwise.  A failing report
    always carries a counterexample.
    """

    suite: str
    status: str
    points: int
    counterexample: Counterexample | None = None
    checks: list[SuiteReport] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    @classmethod
    def combine(cls, suite: str, reports: list[SuiteReport], note: str = "") -> SuiteReport:
        failing = [r for r in reports if r.status == FAIL]
        if failing:
            status = FAIL
        elif any(r.status == SAMPLED_PASS for r in reports):
            status = SAMPLED_PASS
        else:
            status = PASS
        cex = failing[0].counterexample if failing else None
        return cls(suite, status, sum(r.points for r in reports), cex, list(reports), note)

    def check(self, name: str) -> SuiteReport:
        for r in self.checks:
            if r.suite == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "status": self.status, "points": self.points,
             "counterexample": self.counterexample.to_dict() if self.counterexample else None}
        if self.note:
            d["note"] = self.note
        if self.checks:
            d["checks"] = [c.to_dict() for c in self.checks]
        return d

    def lines(self, indent: str = "") -> list[str]:
        head = f"{indent}{self.suite}: {self.status}, {self.points} points"
        if self.note:
            head += f" ({self.note})"
        out = [head]
        if self.counterexample and not self.checks:
            out.append(f"{indent}  counterexample: {self.counterexample}")
        for c in self.checks:
            out.extend(c.lines(indent + "  "))
        return out
