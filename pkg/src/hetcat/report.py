"""Law reports: the uniform result type of every checker in the kernel.

A report is empty iff every law holds. Violations carry the law name and the
ids of the witnessing entries, sorted so reports are deterministic and can be
diffed or golden-tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = ", ".join(self.witness)
        return f"{self.law} at ({where})" + (f": {self.detail}" if self.detail else "")


@dataclass
class LawReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple[str, ...], detail: str = "") -> None:
        self.violations.append(Violation(law, witness, detail))

    def extend(self, other: "LawReport") -> None:
        self.violations.extend(other.violations)

    def normalize(self) -> "LawReport":
        self.violations.sort(key=lambda v: (v.law, v.witness, v.detail))
        return self

    def to_dict(self) -> dict:
        self.normalize()
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [
                {"law": v.law, "witness": list(v.witness), "detail": v.detail}
                for v in self.violations
            ],
        }

    def summary(self) -> str:
        self.normalize()
        if self.ok:
            return f"{self.subject}: all laws hold"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)
