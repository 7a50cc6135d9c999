"""Common result record for statistical and deterministic checkers.

A CheckReport never claims a proof: its verdict distinguishes "no violation
found" (the sampled search came up empty) from "violation witnessed" (a
concrete counterexample is recorded). Witnesses are small dictionaries that
identify the violating input by trial index and seed, so every witness can
be regenerated deterministically.
"""

from dataclasses import dataclass, field

__all__ = ["CheckReport", "MAX_WITNESSES"]

# keep reports small and diffable; the seed makes the full set recoverable
MAX_WITNESSES = 8


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a property check.

    max_violation is the largest observed deviation, threshold the pass
    bound it was compared against, and passed the comparison outcome (the
    direction depends on the check: most pass when the violation stays
    below threshold, counterexample searches pass when every candidate is
    violated; the verdict string states which happened). trials is 0 for
    deterministic checks.
    """

    name: str
    trials: int
    max_violation: float
    threshold: float
    passed: bool
    verdict: str
    witnesses: tuple = field(default_factory=tuple)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def summary(self):
        return "%-34s %-9s max violation %.3e (threshold %.1e, trials %s)" % (
            self.name,
            "pass" if self.passed else "FAIL",
            self.max_violation,
            self.threshold,
            self.trials if self.trials else "-",
        )
