# reports.py
import json
from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOTE = "NOTE"


@dataclass
class CheckResult:
    """One verified claim. NOTE lines record errata and never fail a report."""
    name: str
    status: Status
    detail: str = ""
    witnesses: list = field(default_factory=list)

    @property
    def passed(self):
        return self.status is not Status.FAIL

    def to_dict(self):
        d = {"name": self.name, "status": self.status.value, "detail": self.detail}
        if self.witnesses:
            d["witnesses"] = [str(witness) for witness in self.witnesses]
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def check(self, name, ok, detail="", witnesses=None):
        result = CheckResult(name, Status.PASS if ok else Status.FAIL, detail, list(witnesses or []))
        self.checks.append(result)
        return result

    def note(self, name, detail):
        result = CheckResult(name, Status.NOTE, detail)
        self.checks.append(result)
        return result

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def notes(self):
        return [check for check in self.checks if check.status is Status.NOTE]

    def to_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def render(self):
        lines = [f"== {self.title} =="]
        for check in self.checks:
            line = f"{check.status.value} {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
            for witness in check.witnesses[:10]:
                lines.append(f"    - {witness}")
        verdict = "verified" if self.passed else f"{len(self.failures)} check(s) failed"
        lines.append(f"-- {verdict}")
        return "\n".join(lines)
