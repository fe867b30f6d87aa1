"""Local orthogonality on one or two independent copies of a box."""

import itertools
from dataclasses import dataclass

from .._validation import EQUALITY_TOL
from ..boxes import BITS
from ..errors import InvalidArgument, NonOrthogonalEvents
from ._verdict import Verdict

MAX_COPIES = 2


@dataclass(frozen=True)
class LoEvent:
    """Outcomes and settings for every party-copy slot.

    Slots run Alice, Bob for copy 1, then Alice, Bob for copy 2, matching the
    string form ``"aba'b'|xyx'y'"``.
    """

    outcomes: tuple
    settings: tuple

    def __post_init__(self):
        outcomes = tuple(int(o) for o in self.outcomes)
        settings = tuple(int(s) for s in self.settings)
        if len(outcomes) != len(settings) or not outcomes or len(outcomes) % 2:
            raise InvalidArgument("each Alice/Bob slot needs exactly one outcome and one setting")
        if any(v not in BITS for v in outcomes + settings):
            raise InvalidArgument("outcomes and settings are bits")
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "settings", settings)

    @property
    def copies(self):
        return len(self.outcomes) // 2

    @classmethod
    def parse(cls, text):
        try:
            out, sett = text.split("|")
        except ValueError:
            raise InvalidArgument(f"event must look like 'ab|xy', got {text!r}") from None
        return cls(tuple(out.strip()), tuple(sett.strip()))

    def __str__(self):
        return "".join(map(str, self.outcomes)) + "|" + "".join(map(str, self.settings))

    def probability(self, box):
        """Product of single-copy probabilities ``p(a b | x y)`` over copies."""
        prob = 1.0
        for k in range(self.copies):
            a, b = self.outcomes[2 * k:2 * k + 2]
            x, y = self.settings[2 * k:2 * k + 2]
            prob *= box.prob(a, b, x, y)
        return prob


def lo_orthogonal(e1, e2):
    """True iff some slot has the same setting in both events but different outcomes."""
    if e1.copies != e2.copies:
        raise InvalidArgument("events cover different numbers of copies")
    return any(s1 == s2 and o1 != o2 for o1, o2, s1, s2 in
               zip(e1.outcomes, e2.outcomes, e1.settings, e2.settings))


def _events(spec):
    return [e if isinstance(e, LoEvent) else LoEvent.parse(e) for e in spec]


PRESETS = {
    "LO1": ("10|01", "11|01", "00|00", "01|00"),
    "LO2-5": ("0000|0000", "1110|0011", "0011|0110", "1101|1011", "0111|1101"),
    "LO2-10": ("1111|0000", "1100|1010", "0100|1100", "0011|0001", "0010|0111",
               "1011|0000", "0101|1100", "1101|1100", "1010|0110", "1001|0100"),
}


def preset(name):
    try:
        return _events(PRESETS[name])
    except KeyError:
        raise InvalidArgument(f"unknown LO preset {name!r}; choose from {sorted(PRESETS)}") from None


def lo_evaluate(events, box, tol=EQUALITY_TOL):
    """Sum of the event probabilities on independent copies of ``box``; bound is 1."""
    events = _events(events)
    if not events:
        raise InvalidArgument("no events given")
    k = events[0].copies
    if k > MAX_COPIES:
        raise InvalidArgument(f"at most {MAX_COPIES} copies are supported")
    for e1, e2 in itertools.combinations(events, 2):
        if e1.copies != k or e2.copies != k:
            raise InvalidArgument("all events must cover the same number of copies")
        if not lo_orthogonal(e1, e2):
            raise NonOrthogonalEvents(f"{e1} and {e2} are not orthogonal")
    total = sum(e.probability(box) for e in events)
    return Verdict(bool(total <= 1.0 + tol), float(total), 1.0)


def lo1_family():
    """Every single-copy inequality of the form P(a != a0 | x y') + P(a0 | x y) <= 1.

    Both parties are covered: Bob's version swaps the roles of the two slots.
    Cases with y == y' are omitted since they hold with equality for any box.
    """
    family = []
    for c0, own, other, other2 in itertools.product(BITS, repeat=4):
        if other == other2:
            continue
        # Alice keeps setting ``own`` while Bob switches between other2 and other
        alice = [LoEvent((1 - c0, b), (own, other2)) for b in BITS]
        alice += [LoEvent((c0, b), (own, other)) for b in BITS]
        bob = [LoEvent((a, 1 - c0), (other2, own)) for a in BITS]
        bob += [LoEvent((a, c0), (other, own)) for a in BITS]
        family += [alice, bob]
    return family


def check_lo1(box, tol=EQUALITY_TOL):
    """LO at one copy; witness is the largest sum over :func:`lo1_family`."""
    worst = max(lo_evaluate(ev, box, tol).witness for ev in lo1_family())
    return Verdict(bool(worst <= 1.0 + tol), float(worst), 1.0)
