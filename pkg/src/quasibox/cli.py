"""Command-line interface: ``report``, ``scan``, ``ml-sweep`` and ``ip-game``."""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._validation import EQUALITY_TOL
from .boxes import (Box, chsh_all, make_deterministic, make_isotropic, make_noise,
                    make_pr, make_slice, signaling_gap)
from .errors import InvalidArgument, NoJqpdExists, QuasiboxError
from .optim import min_l1
from .principles import (NTCC_MSTAR_CITATION, NTCC_MSTAR_THRESHOLD, NTCC_S_CITATION,
                         NTCC_S_THRESHOLD, check_local, check_lo1, check_tlm,
                         check_uffink, ic_van_dam, lo_evaluate, ml_macroscopic,
                         ntcc_ip_game, preset)

SCAN_HEADER = "gamma,beta,S,mstar,ns,local,uffink,tlm,ic,lo2_10"
ML_HEADER = "n,gamma,mstar"
MAX_SWEEP_COPIES = 15


def fmt(x):
    """17 significant digits, so reruns can be compared byte for byte."""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def named_box(name):
    """Resolve a preset: ``pr1``..``pr8``, ``noise``, ``l12``, ``iso:<gamma>``, ``det:<a0a1b0b1>``."""
    name = name.strip().lower()
    try:
        if name == "noise":
            return make_noise()
        if name == "l12":
            return make_slice([(0.5, make_pr(0)), (0.5, make_pr(1))])
        if name.startswith("pr") and name[2:].isdigit():
            return make_pr(int(name[2:]) - 1)
        if name.startswith("iso:"):
            return make_isotropic(float(name[4:]))
        if name.startswith("det:"):
            bits = name[4:]
            if len(bits) != 4 or set(bits) - {"0", "1"}:
                raise InvalidArgument("det: needs four bits, e.g. det:1111")
            return make_deterministic(*(int(c) for c in bits))
    except ValueError as exc:
        raise InvalidArgument(f"bad preset {name!r}: {exc}") from None
    raise InvalidArgument(f"unknown box preset {name!r}")


def box_id(box):
    canon = json.dumps([[fmt(v) for v in row] for row in box.p.tolist()])
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def _unavailable(reason):
    return {"available": False, "reason": reason}


def report_box(box, tol=EQUALITY_TOL, ml_copies=()):
    """Evaluate every principle on ``box``; every verdict carries its witness.

    For a signaling box only the no-signaling and LO sections are computed;
    quantities that need a joint quasi-probability are marked unavailable.
    """
    gap = signaling_gap(box)
    ns = gap <= tol
    rep = {
        "id": box_id(box),
        "box": box.to_dict(),
        "ns": {"satisfied": ns, "witness": gap, "bound": tol},
    }
    lo = {"LO1": check_lo1(box, tol).to_dict()}
    for name in ("LO2-5", "LO2-10"):
        lo[name] = lo_evaluate(preset(name), box, tol).to_dict()
    if not ns:
        missing = _unavailable("box is signaling: no joint quasi-probability exists")
        for key in ("S", "m_star", "local", "uffink", "tlm", "ic", "ntcc", "ml"):
            rep[key] = missing
        rep["lo"] = lo
        return rep

    S = chsh_all(box)
    try:
        l1 = min_l1(box)
    except NoJqpdExists as exc:
        l1 = None
        reason = str(exc)
    rep["S"] = {f"S{m}{n}": float(S[m, n]) for m in (0, 1) for n in (0, 1)}
    rep["max_abs_S"] = float(np.max(np.abs(S)))
    if l1 is None:
        rep["m_star"] = _unavailable(reason)
    else:
        rep["m_star"] = l1.m_star
        rep["jqpd"] = l1.jqpd.to_dict()
    rep["local"] = check_local(box, tol).to_dict()
    rep["uffink"] = check_uffink(box, tol).to_dict()
    rep["tlm"] = check_tlm(box, tol).to_dict()
    ic = ic_van_dam(box, tol).to_dict()
    ic["satisfied"] = not ic["violates_ic"]
    rep["ic"] = ic
    rep["lo"] = lo
    rep["ntcc"] = {
        "satisfied": bool(rep["max_abs_S"] <= NTCC_S_THRESHOLD),
        "witness": rep["max_abs_S"],
        "bound": NTCC_S_THRESHOLD,
        "basis": NTCC_S_CITATION,
        "mstar_reference": {"bound": NTCC_MSTAR_THRESHOLD, "basis": NTCC_MSTAR_CITATION},
    }
    ml = {}
    for n in ml_copies:
        macro = ml_macroscopic(box, n)
        m = min_l1(macro).m_star
        ml[str(n)] = {"satisfied": bool(m <= 1.0 + tol), "witness": m, "bound": 1.0,
                      "box": macro.to_dict()}
    rep["ml"] = ml
    return rep


@dataclass(frozen=True)
class ScanGrid:
    """Points ``gamma*P + beta*B + (1-gamma-beta)*N`` on a regular grid, skipping gamma+beta > 1."""

    P: Box
    B: Box
    N: Box
    gamma_steps: int = 11
    beta_steps: int = 11

    def __post_init__(self):
        if self.gamma_steps < 2 or self.beta_steps < 2:
            raise InvalidArgument("grids need at least 2 steps per axis")

    def points(self):
        for g in np.linspace(0.0, 1.0, self.gamma_steps):
            for b in np.linspace(0.0, 1.0, self.beta_steps):
                if g + b > 1.0 + 1e-12:
                    continue
                rest = max(0.0, 1.0 - g - b)
                yield float(g), float(b), rest


SLICES = {
    "pr-d": ("pr1", "det:1111", "noise"),
    "pr-l12": ("pr1", "l12", "noise"),
    "trivial": ("noise", "noise", "noise"),
}


def _mix(grid, g, b, rest):
    p = g * grid.P.p + b * grid.B.p + rest * grid.N.p
    return Box(p / p.sum(axis=1, keepdims=True))


def scan_row(grid, point, tol=EQUALITY_TOL):
    g, b, rest = point
    box = _mix(grid, g, b, rest)
    ns = signaling_gap(box) <= tol
    lo = lo_evaluate(preset("LO2-10"), box, tol).satisfied
    if not ns:
        return [g, b, None, None, False, None, None, None, None, lo]
    S = float(np.max(np.abs(chsh_all(box))))
    return [g, b, S, min_l1(box).m_star, True,
            check_local(box, tol).satisfied, check_uffink(box, tol).satisfied,
            check_tlm(box, tol).satisfied, not ic_van_dam(box, tol).violates_ic, lo]


def _scan_row_star(args):
    return scan_row(*args)


def scan_slice(grid, tol=EQUALITY_TOL, jobs=1):
    """CSV text for every feasible grid point, in row-major (gamma, beta) order."""
    tasks = [(grid, pt, tol) for pt in grid.points()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_row_star, tasks, chunksize=8))
    else:
        rows = [_scan_row_star(t) for t in tasks]
    out = io.StringIO()
    out.write(SCAN_HEADER + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")
    return out.getvalue()


def _ml_point(args):
    n, g = args
    return [n, g, min_l1(ml_macroscopic(make_isotropic(g), n)).m_star]


def sweep_ml(n_list, gamma_steps=51, jobs=1):
    """M* of the macroscopic isotropic box for each odd copy count and gamma."""
    for n in n_list:
        if n < 1 or n % 2 == 0 or n > MAX_SWEEP_COPIES:
            raise InvalidArgument(
                f"copy counts must be odd and at most {MAX_SWEEP_COPIES}, got {n}")
    if gamma_steps < 2:
        raise InvalidArgument("gamma_steps must be at least 2")
    tasks = [(n, float(g)) for n in n_list for g in np.linspace(0.0, 1.0, gamma_steps)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_ml_point, tasks, chunksize=8))
    else:
        rows = [_ml_point(t) for t in tasks]
    lines = [ML_HEADER] + [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _load_box(args):
    if args.box and args.preset:
        raise InvalidArgument("give either --box or --preset, not both")
    if args.box:
        with open(args.box, encoding="utf-8") as fh:
            return Box.from_json(fh.read())
    if args.preset:
        return named_box(args.preset)
    raise InvalidArgument("a box is required (--box FILE or --preset NAME)")


def _slice_grid(args):
    if args.vertices:
        names = [s for s in args.vertices.split(",") if s]
        if len(names) != 3:
            raise InvalidArgument("--vertices needs three presets: P,B,N")
    else:
        names = SLICES[args.slice]
    P, B, N = (named_box(n) for n in names)
    return ScanGrid(P, B, N, args.gamma_steps, args.beta_steps)


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=EQUALITY_TOL,
                        help="tolerance for verdicts (default: %(default)g)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes; output order is unaffected")

    parser = argparse.ArgumentParser(prog="quasibox", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", parents=[common], help="principle report for one box (JSON)")
    rep.add_argument("--box", help='JSON file {"p": [[...], ...]}')
    rep.add_argument("--preset", help="pr1..pr8, noise, l12, iso:<gamma>, det:<a0a1b0b1>")
    rep.add_argument("--ml", type=_int_list, default=[],
                     help="comma-separated copy counts for macroscopic locality")

    scan = sub.add_parser("scan", parents=[common], help="CSV scan over a 2-D slice")
    scan.add_argument("--slice", choices=sorted(SLICES), default="pr-d")
    scan.add_argument("--vertices", help="custom slice as three presets P,B,N")
    scan.add_argument("--gamma-steps", type=int, default=21)
    scan.add_argument("--beta-steps", type=int, default=21)

    ml = sub.add_parser("ml-sweep", parents=[common], help="macroscopic M* along the isotropic line")
    ml.add_argument("--n", type=_int_list, default=[1, 3, 5, 7, 9])
    ml.add_argument("--gamma-steps", type=int, default=51)

    game = sub.add_parser("ip-game", parents=[common], help="simulate the inner-product game")
    game.add_argument("--box")
    game.add_argument("--preset")
    game.add_argument("--n-bits", type=int, default=8)
    game.add_argument("--trials", type=int, default=10000)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "report":
            text = json.dumps(report_box(_load_box(args), args.tol, args.ml), indent=2) + "\n"
        elif args.command == "scan":
            text = scan_slice(_slice_grid(args), args.tol, args.jobs)
        elif args.command == "ml-sweep":
            text = sweep_ml(args.n, args.gamma_steps, args.jobs)
        else:
            res = ntcc_ip_game(_load_box(args), args.n_bits, args.trials, args.seed)
            text = json.dumps(res.to_dict(), indent=2) + "\n"
        _emit(text, args.out)
    except (QuasiboxError, ValueError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
