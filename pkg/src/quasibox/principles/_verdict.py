from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Pass/fail for one inequality together with the number it was decided on."""

    satisfied: bool
    witness: float
    bound: float
    notes: tuple = field(default_factory=tuple)

    @property
    def violated(self):
        return not self.satisfied

    def to_dict(self):
        out = {"satisfied": self.satisfied, "witness": self.witness, "bound": self.bound}
        if self.notes:
            out["notes"] = list(self.notes)
        return out
