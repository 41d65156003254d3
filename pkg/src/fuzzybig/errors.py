"""Exception types and validation reports shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field


class ModelError(Exception):
    """Base class for every structured error raised by this package."""


class FrameMismatchError(ModelError):
    """Degrees from two different frame instances were combined."""


class SignatureMismatchError(ModelError):
    """Two graphs built over different signatures were combined."""


class InterfaceMismatchError(ModelError):
    """Composition was attempted across unequal interfaces."""


class SupportOverlapError(ModelError):
    """Two graphs that must have disjoint node/edge identifiers share some."""


class NameClashError(ModelError):
    """A tensor product or composite would conflate distinct names."""


class NotCrispError(ModelError):
    """A fuzzy structure was lowered to a crisp one but is genuinely fuzzy."""


class NotComposableError(ModelError):
    """Two arrows whose endpoints do not meet were composed."""


class ParseError(ModelError):
    """A model document failed to parse; ``path`` points at the offender."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.message = message
        self.path = path


@dataclass
class ValidationReport:
    """Outcome of a validity check: either clean or a list of problems."""

    subject: str
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def add(self, problem: str) -> None:
        self.problems.append(problem)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for problem in other.problems:
            self.problems.append(prefix + problem if prefix else problem)

    def __str__(self) -> str:
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: INVALID ({len(self.problems)} problem(s))"]
        lines.extend(f"  - {p}" for p in self.problems)
        return "\n".join(lines)
