"""scikit-learn compatible wrappers.

Every estimator takes boxes as rows of a 2-D array with 16 columns, the 4x4
table flattened row-major (input pair major, outcome pair minor), so the
tools drop into ``Pipeline`` and friends.
"""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from ._validation import EQUALITY_TOL, check_box_array
from .boxes import Box, is_no_signaling, signaling_gap
from .errors import InvalidArgument
from .optim import min_l1
from .principles import (check_local, check_lo1, check_tlm, check_uffink, ic_van_dam,
                         lo_evaluate, ml_macroscopic, preset)


def check_boxes(X):
    """Validate ``X`` and return it as a list of :class:`Box`."""
    return [Box(p) for p in check_box_array(X)]


class MinL1Transformer(TransformerMixin, BaseEstimator):
    """Map each box to its minimal-L1 joint quasi-probability (16 atom weights)."""

    def fit(self, X, y=None):
        check_boxes(X)
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        return np.stack([min_l1(b).jqpd.q for b in check_boxes(X)])

    def score_samples(self, X):
        """M* per box."""
        return np.array([min_l1(b).m_star for b in check_boxes(X)])


class MacroscopicTransformer(TransformerMixin, BaseEstimator):
    """Coarse-grain each box over ``n_copies`` independent uses by majority vote."""

    def __init__(self, n_copies=3):
        self.n_copies = n_copies

    def fit(self, X, y=None):
        check_boxes(X)
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        return np.stack([ml_macroscopic(b, self.n_copies).p.reshape(16)
                         for b in check_boxes(X)])


def _ic_verdict(box, tol):
    rep = ic_van_dam(box, tol)
    return not rep.violates_ic, rep.criterion_lhs, 1.0


def _verdict_tuple(check):
    def run(box, tol):
        v = check(box, tol)
        return v.satisfied, v.witness, v.bound
    return run


def _lo_preset(name):
    events = preset(name)

    def run(box, tol):
        v = lo_evaluate(events, box, tol)
        return v.satisfied, v.witness, v.bound
    return run


def _ns(box, tol):
    return is_no_signaling(box, tol), signaling_gap(box), tol


def _mstar(box, tol):
    m = min_l1(box).m_star
    return m <= 1.0 + tol, m, 1.0


PRINCIPLES = {
    "ns": _ns,
    "local": _verdict_tuple(check_local),
    "mstar": _mstar,
    "uffink": _verdict_tuple(check_uffink),
    "tlm": _verdict_tuple(check_tlm),
    "ic": _ic_verdict,
    "lo1": _verdict_tuple(check_lo1),
    "lo2-5": _lo_preset("LO2-5"),
    "lo2-10": _lo_preset("LO2-10"),
}


class PrincipleClassifier(ClassifierMixin, BaseEstimator):
    """Label each box True when it satisfies ``principle``.

    ``decision_function`` returns ``bound - witness``, nonnegative (up to
    ``tol``) exactly for satisfying boxes. With ``n_copies`` set, boxes are
    first coarse-grained by :class:`MacroscopicTransformer`.
    """

    def __init__(self, principle="tlm", tol=EQUALITY_TOL, n_copies=None):
        self.principle = principle
        self.tol = tol
        self.n_copies = n_copies

    def _rule(self):
        try:
            return PRINCIPLES[self.principle]
        except KeyError:
            raise InvalidArgument(
                f"unknown principle {self.principle!r}; choose from {sorted(PRINCIPLES)}") from None

    def _boxes(self, X):
        boxes = check_boxes(X)
        if self.n_copies is not None:
            boxes = [ml_macroscopic(b, self.n_copies) for b in boxes]
        return boxes

    def fit(self, X, y=None):
        self._rule()
        check_boxes(X)
        self.classes_ = np.array([False, True])
        self.n_features_in_ = 16
        return self

    def _evaluate(self, X):
        rule = self._rule()
        return [rule(b, self.tol) for b in self._boxes(X)]

    def predict(self, X):
        return np.array([bool(ok) for ok, _, _ in self._evaluate(X)])

    def decision_function(self, X):
        return np.array([bound - w for _, w, bound in self._evaluate(X)])
