"""Dense two-phase simplex and the minimal-L1 quasi-probability fit of a box."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .boxes import Box
from .errors import InvalidArgument, NoJqpdExists
from .quasiprob import MARGINAL_MATRIX, Jqpd

FEASIBILITY_TOL = 1e-9
_PIVOT_TOL = 1e-11
_COST_TOL = 1e-11


class LpStatus(str, enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True, eq=False)
class LpProblem:
    """minimize ``objective @ z`` subject to ``A @ z == b`` and ``z >= 0``."""

    objective: np.ndarray
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).reshape(-1)
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if A.ndim == 1:
            A = A.reshape(1, -1)
        if A.ndim != 2 or A.shape[1] != c.size:
            raise InvalidArgument(
                f"constraint matrix must have {c.size} columns, got shape {A.shape}")
        if b.size != A.shape[0]:
            raise InvalidArgument(
                f"right-hand side has length {b.size}, expected {A.shape[0]}")
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n_vars(self):
        return self.objective.size


@dataclass(frozen=True, eq=False)
class LpSolution:
    status: LpStatus
    z: np.ndarray | None
    objective_value: float

    @property
    def optimal(self):
        return self.status is LpStatus.OPTIMAL


class _Tableau:
    """Simplex tableau ``[A | rhs]`` in canonical form with respect to ``basis``."""

    def __init__(self, T, basis):
        self.T = T
        self.basis = basis
        self.max_iter = 50 * sum(T.shape)

    def pivot(self, row, col):
        T = self.T
        T[row] /= T[row, col]
        for i in range(T.shape[0]):
            if i != row and T[i, col] != 0.0:
                T[i] -= T[i, col] * T[row]
        self.basis[row] = col

    def run(self, cost, n_allowed):
        """Bland's rule: lowest-index improving column, lowest-index basic variable on ties."""
        T = self.T
        for _ in range(self.max_iter):
            reduced = cost[:n_allowed] - cost[self.basis] @ T[:, :n_allowed]
            candidates = np.flatnonzero(reduced < -_COST_TOL)
            if candidates.size == 0:
                return LpStatus.OPTIMAL
            col = int(candidates[0])
            column = T[:, col]
            rows = np.flatnonzero(column > _PIVOT_TOL)
            if rows.size == 0:
                return LpStatus.UNBOUNDED
            ratios = T[rows, -1] / column[rows]
            best = ratios.min()
            tied = rows[ratios <= best + 1e-12 * max(1.0, abs(best))]
            row = min(tied, key=lambda r: self.basis[r])
            self.pivot(int(row), col)
        raise RuntimeError("simplex iteration limit reached")


def solve_lp(problem):
    """Solve ``problem`` exactly up to floating point; deterministic for a given input."""
    if not isinstance(problem, LpProblem):
        raise InvalidArgument("solve_lp expects an LpProblem")
    c, A0, b0 = problem.objective, problem.A, problem.b
    m, n = A0.shape
    if m == 0:
        if np.any(c < -_COST_TOL):
            return LpSolution(LpStatus.UNBOUNDED, None, -np.inf)
        return LpSolution(LpStatus.OPTIMAL, np.zeros(n), 0.0)

    flip = np.where(b0 < 0, -1.0, 1.0)
    T = np.zeros((m, n + m + 1))
    T[:, :n] = A0 * flip[:, None]
    T[:, n:n + m] = np.eye(m)
    T[:, -1] = b0 * flip
    tab = _Tableau(T, list(range(n, n + m)))

    # phase 1: minimise the sum of artificials
    cost1 = np.concatenate([np.zeros(n), np.ones(m)])
    tab.run(cost1, n + m)
    infeasibility = float(cost1[tab.basis] @ tab.T[:, -1])
    if infeasibility > FEASIBILITY_TOL:
        return LpSolution(LpStatus.INFEASIBLE, None, float("nan"))

    # artificials left in the basis sit at zero; swap them out or drop their rows
    keep = []
    for r in range(m):
        if tab.basis[r] < n:
            keep.append(r)
            continue
        cols = np.flatnonzero(np.abs(tab.T[r, :n]) > _PIVOT_TOL)
        if cols.size:
            tab.pivot(r, int(cols[0]))
            keep.append(r)
    T2 = np.hstack([tab.T[keep, :n], tab.T[keep, -1:]])
    tab = _Tableau(T2, [tab.basis[r] for r in keep])

    c_ext = np.concatenate([c, [0.0]])
    status = tab.run(c_ext, n)
    if status is LpStatus.UNBOUNDED:
        return LpSolution(status, None, -np.inf)

    z = _basic_solution(A0, b0, tab.basis, n)
    return LpSolution(LpStatus.OPTIMAL, z, float(c @ z))


def _basic_solution(A, b, basis, n):
    """Recompute the basic variables from the original data to shed pivot round-off."""
    cols = sorted(basis)
    zb, *_ = np.linalg.lstsq(A[:, cols], b, rcond=None)
    z = np.zeros(n)
    z[cols] = zb
    z[np.abs(z) < 1e-15] = 0.0
    return np.maximum(z, 0.0)


@dataclass(frozen=True, eq=False)
class L1Result:
    m_star: float
    jqpd: Jqpd


def l1_problem(box):
    """LP with atoms split as ``q = u - v``: minimise sum(u + v) s.t. marginals equal the box."""
    M = MARGINAL_MATRIX
    A = np.hstack([M, -M])
    return LpProblem(np.ones(32), A, box.p.reshape(16))


def min_l1(box):
    """Smallest L1 norm of a signed joint distribution reproducing ``box``.

    Raises :class:`NoJqpdExists` when the marginal equations are inconsistent,
    which happens exactly for signaling boxes.
    """
    if not isinstance(box, Box):
        box = Box(box)
    sol = solve_lp(l1_problem(box))
    if sol.status is LpStatus.INFEASIBLE:
        raise NoJqpdExists("box admits no joint quasi-probability; it is signaling")
    if not sol.optimal:
        raise RuntimeError(f"unexpected LP status {sol.status}")
    q = sol.z[:16] - sol.z[16:]
    # sum|q| >= |sum q| = 1; keep round-off from reporting M* just below 1
    m_star = max(float(np.abs(q).sum()), 1.0)
    return L1Result(m_star=m_star, jqpd=Jqpd(q))
