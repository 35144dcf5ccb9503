"""Command-line front end.

Exit status: 0 on success, 1 for invalid input, 2 when a numeric
precondition fails or an integration leaves the simplex.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from .bases import BasisKind, basis_E, bimatrix_dimensions, dimensions
from .classify import bimatrix_stability, preference_digraph, stability_report
from .core import (
    BimatrixGame,
    CapacityError,
    GameError,
    IntegrationError,
    MatrixGame,
    PreconditionError,
)
from .decompose import decompose
from .dynamics import SimplexPoint, field_split, integrate, replicator_field, replicator_field_bimatrix
from .nplayer import (
    TensorGame,
    decompose_tensor,
    is_exact_zero_sum_tensor,
    tensor_dimensions,
    tensor_inner_product,
)
from .zeeman import Zeeman3Params, Zeeman4Params, zeeman3, zeeman3_classify, zeeman4, zeeman4_classify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_NUM_LIST = re.compile(r"\[\s*([-+0-9.eE,\s]*?)\s*\]")


def _dump(obj) -> str:
    # json writes floats with repr, the shortest string that round-trips;
    # innermost numeric lists are kept on one line
    text = json.dumps(obj, indent=2, allow_nan=False)
    return _NUM_LIST.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text)


def _tolist(m):
    return np.asarray(m, dtype=float).tolist()


def _field(doc, key, path):
    if key not in doc:
        raise UsageError(f"{path}: missing field {key!r}")
    try:
        arr = np.array(doc[key], dtype=float)
    except (TypeError, ValueError):
        raise UsageError(f"{path}: field {key!r} is not a numeric array") from None
    if not np.all(np.isfinite(arr)):
        raise UsageError(f"{path}: field {key!r} has non-finite entries")
    return arr


def load_game(path: str):
    """Read a GameFile and return ``(game, labels)``."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: malformed JSON ({e.msg}, line {e.lineno})") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: top level must be an object")
    kind = doc.get("kind")
    try:
        if kind == "symmetric":
            a = _field(doc, "A", path)
            if a.ndim != 2 or a.shape[0] != a.shape[1]:
                raise UsageError(f"{path}: field 'A' must be a square matrix, got shape {a.shape}")
            game = MatrixGame(a)
        elif kind == "bimatrix":
            a, b = _field(doc, "A", path), _field(doc, "B", path)
            if a.ndim != 2 or a.shape != b.shape:
                raise UsageError(f"{path}: fields 'A' and 'B' must be matrices of equal shape")
            game = BimatrixGame(a, b)
        elif kind == "nplayer":
            if not isinstance(doc.get("payoffs"), list):
                raise UsageError(f"{path}: field 'payoffs' must be a list of tensors")
            ts = [_field({"t": t}, "t", path) for t in doc["payoffs"]]
            game = TensorGame(tuple(ts))
        else:
            raise UsageError(f"{path}: field 'kind' must be symmetric, bimatrix or nplayer, got {kind!r}")
    except GameError as e:
        raise UsageError(f"{path}: {e}") from None
    labels = doc.get("labels")
    if labels is not None and not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
        raise UsageError(f"{path}: field 'labels' must be a list of strings")
    return game, labels


def game_document(game, labels=None) -> dict:
    if isinstance(game, BimatrixGame):
        doc = {"kind": "bimatrix", "A": _tolist(game.a), "B": _tolist(game.b)}
    elif isinstance(game, TensorGame):
        doc = {"kind": "nplayer", "payoffs": [_tolist(t) for t in game.payoffs]}
    else:
        doc = {"kind": "symmetric", "A": _tolist(getattr(game, "payoff", game))}
    if labels:
        doc["labels"] = list(labels)
    return doc


def _vector(text, flag, length=None):
    try:
        v = np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated numbers, got {text!r}") from None
    if length is not None and v.size != length:
        raise UsageError(f"{flag}: expected {length} coordinates, got {v.size}")
    try:
        SimplexPoint(v)
    except GameError as e:
        raise UsageError(f"{flag}: {e}") from None
    return v


def _component(c):
    if isinstance(c, BimatrixGame):
        return {"A": _tolist(c.a), "B": _tolist(c.b)}
    if isinstance(c, TensorGame):
        return [_tolist(t) for t in c.payoffs]
    return _tolist(c)


def _decompose_report(path, game) -> dict:
    if isinstance(game, TensorGame):
        d = decompose_tensor(game)
        parts = {
            "potential": d.potential_component,
            "anti_potential": d.anti_potential_component,
            "zero_sum": d.zero_sum_component,
            "anti_zero_sum": d.anti_zero_sum_component,
        }
        return {
            "file": path,
            "kind": "nplayer",
            "components": {k: _component(v) for k, v in parts.items()},
            "norms": {k: v.norm() for k, v in parts.items()},
            "orthogonality": {
                "potential.anti_potential": tensor_inner_product(d.potential_component, d.anti_potential_component),
                "zero_sum.anti_zero_sum": tensor_inner_product(d.zero_sum_component, d.anti_zero_sum_component),
            },
            "reconstruction_residual": (game - d.potential_component - d.anti_potential_component).norm(),
        }
    d = decompose(game)
    return {
        "file": path,
        "kind": "bimatrix" if isinstance(game, BimatrixGame) else "symmetric",
        "components": {
            "anti_zero_sum": _component(d.anti_zero_sum),
            "kernel": _component(d.kernel),
            "anti_potential": _component(d.anti_potential),
        },
        "norms": d.norms(),
        "orthogonality": d.orthogonality(),
        "reconstruction_residual": d.residual,
    }


def _pretty(report) -> str:
    out = [f"# {report['file']} ({report['kind']})"]
    for name, comp in report["components"].items():
        out.append(f"{name}  (norm {report['norms'][name]:.6g})")
        mats = comp.items() if isinstance(comp, dict) else [("", comp)]
        for label, m in mats:
            if label:
                out.append(f"  {label}:")
            out.append(np.array2string(np.array(m), precision=6, suppress_small=True))
    for k, v in report["orthogonality"].items():
        out.append(f"<{k}> = {v:.3e}")
    out.append(f"reconstruction residual = {report['reconstruction_residual']:.3e}")
    return "\n".join(out)


def _emit(items):
    return items[0] if len(items) == 1 else items


def cmd_decompose(args, out):
    reports = [_decompose_report(p, load_game(p)[0]) for p in args.files]
    if args.pretty:
        out.write("\n\n".join(_pretty(r) for r in reports) + "\n")
    else:
        out.write(_dump(_emit(reports)) + "\n")


def cmd_classify(args, out):
    reports = []
    for p in args.files:
        game, _ = load_game(p)
        if isinstance(game, TensorGame):
            d = decompose_tensor(game)
            thr = args.tol * (1.0 + game.norm())
            zs = is_exact_zero_sum_tensor(game, args.tol)
            rep = {
                "is_potential": d.anti_potential_component.norm() <= thr,
                "is_zero_sum": d.anti_zero_sum_component.norm() <= thr,
                "is_exact_zero_sum": zs.holds,
                "anti_potential_norm": d.anti_potential_component.norm(),
                "anti_zero_sum_norm": d.anti_zero_sum_component.norm(),
            }
        elif isinstance(game, BimatrixGame):
            rep = bimatrix_stability(game, args.tol).as_dict()
        else:
            rep = stability_report(game, args.tol).as_dict()
        reports.append({"file": p, **rep})
    out.write(_dump(_emit(reports)) + "\n")


def cmd_simulate(args, out):
    game, _ = load_game(args.file)
    if isinstance(game, TensorGame):
        raise UsageError(f"{args.file}: simulate supports symmetric and bimatrix games")
    y0 = None
    if isinstance(game, BimatrixGame):
        if args.y0 is None:
            raise UsageError("--y0: required for bimatrix games")
        y0 = _vector(args.y0, "--y0", game.l_c)
    l_r = game.l_r if isinstance(game, BimatrixGame) else game.l
    traj = integrate(game, _vector(args.x0, "--x0", l_r), args.t_end, args.step, y0=y0, track_H=args.track_H)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            traj.write_csv(fh)
    else:
        traj.write_csv(out)


def cmd_field(args, out):
    game, _ = load_game(args.file)
    if isinstance(game, TensorGame):
        raise UsageError(f"{args.file}: field supports symmetric and bimatrix games")
    x = _vector(args.x, "--x", game.l_r if isinstance(game, BimatrixGame) else game.l)
    if isinstance(game, BimatrixGame):
        if args.y is None:
            raise UsageError("--y: required for bimatrix games")
        fx, fy = replicator_field_bimatrix(game, x, _vector(args.y, "--y", game.l_c))
        rep = {"field_x": fx.tolist(), "field_y": fy.tolist()}
    else:
        s = field_split(game, x)
        rep = {
            "field": replicator_field(game, x).tolist(),
            "potential_part": s.potential_part.tolist(),
            "monotonic_part": s.monotonic_part.tolist(),
            "conservative_part": s.conservative_part.tolist(),
            "eta": s.eta.tolist(),
        }
    out.write(_dump(rep) + "\n")


def cmd_zeeman(args, out):
    if args.which == "gen3":
        p = Zeeman3Params(args.alpha, args.beta, args.eta, args.theta)
        game, rep = zeeman3(p), zeeman3_classify(p)
    else:
        if args.gamma is None:
            raise UsageError("--gamma: required for gen4")
        p = Zeeman4Params(args.alpha, args.beta, args.gamma, args.eta)
        game, rep = zeeman4(p), zeeman4_classify(p)
    doc = game_document(game)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(_dump(doc) + "\n")
    out.write(_dump({"game": doc, "report": rep.as_dict()}) + "\n")


_BASIS = {"K": BasisKind.K, "N": BasisKind.N, "Ek": BasisKind.E_KAPPA, "Eg": BasisKind.E_GAMMA, "Ee": BasisKind.E_ETA}


def cmd_basis(args, out):
    l_r = args.lr if args.lr is not None else args.l
    l_c = args.lc if args.lc is not None else l_r
    if l_r is None:
        raise UsageError("--l: required (or --lr/--lc)")
    kind = _BASIS[args.kind]
    if kind in (BasisKind.K, BasisKind.N) and l_r != l_c:
        raise UsageError(f"--lr/--lc: {args.kind} matrices are square")
    m = basis_E(kind, l_r, l_c, args.i, args.j)
    out.write(_dump(_tolist(m)) + "\n")


def cmd_dims(args, out):
    if args.n is not None:
        if args.l is None:
            raise UsageError("--l: required with --n")
        rep = tensor_dimensions(args.n, args.l)
    elif args.lr is not None or args.lc is not None:
        if args.lr is None or args.lc is None:
            raise UsageError("--lr/--lc: both are required")
        rep = bimatrix_dimensions(args.lr, args.lc).as_dict()
    elif args.l is not None:
        rep = dimensions(args.l).as_dict()
    else:
        raise UsageError("--l: required")
    out.write(_dump(rep) + "\n")


def cmd_digraph(args, out):
    game, labels = load_game(args.file)
    if not isinstance(game, MatrixGame):
        raise UsageError(f"{args.file}: digraph needs a symmetric game")
    dot = preference_digraph(game).to_dot(labels)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        out.write(dot)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="gamedecomp", description="Decompose and classify normal form games.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="anti-zero-sum / kernel / anti-potential split")
    p.add_argument("files", nargs="+")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="aligned matrices")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="potential, zero-sum and stability report")
    p.add_argument("files", nargs="+")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="integrate the replicator dynamics, write CSV")
    p.add_argument("file")
    p.add_argument("--x0", required=True)
    p.add_argument("--y0")
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out")
    p.add_argument("--track-H", action="store_true", dest="track_H")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("field", help="replicator field and its three-part split")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("zeeman", help="construct a Zeeman game")
    p.add_argument("which", choices=["gen3", "gen4"])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float)
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--out", help="also write the game file here")
    p.set_defaults(func=cmd_zeeman)

    p = sub.add_parser("basis", help="print one basis matrix (1-based indices)")
    p.add_argument("kind", choices=list(_BASIS))
    p.add_argument("--l", type=int)
    p.add_argument("--lr", type=int)
    p.add_argument("--lc", type=int)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dims", help="subspace dimensions")
    p.add_argument("--l", type=int)
    p.add_argument("--lr", type=int)
    p.add_argument("--lc", type=int)
    p.add_argument("--n", type=int, help="number of players")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("digraph", help="DOT graph of a sign-pattern game")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_digraph)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as e:
        err.write(f"gamedecomp: error: {e}\n")
        return 1
    except (PreconditionError, IntegrationError, CapacityError) as e:
        err.write(f"gamedecomp: error: {e}\n")
        return 2
    except GameError as e:
        err.write(f"gamedecomp: error: {e}\n")
        return 1
    return 0


run = main
