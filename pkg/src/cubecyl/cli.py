"""Command-line interface: ``cubecyl <command> ...``.

Errors go to stderr as a single line ``error: <Kind>: <detail>``.  Exit codes:
0 success, 1 stability failures found, 2 bad input (missing file, parse error,
invalid complex, bad arguments).
"""
import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import generators
from .cylinders import cylinder
from .errors import CubeComplexError, NotMedian
from .hyperbolicity import geometry
from .intervals import interval_by_metric, peripheral
from .io import ComplexFileError, load_complex, save_complex, to_dot
from .stability import _frac, constants_for, stability_sweep


class CliError(Exception):
    def __init__(self, kind, detail):
        self.kind, self.detail = kind, detail
        super().__init__(f"{kind}: {detail}")


def fmt_int(v, max_digits=2000):
    if v is None:
        return "not expanded"
    digits = int(v.bit_length() * math.log10(2)) + 1
    if digits > max_digits:
        return f"<integer with about {digits} digits>"
    return str(v)


def _load(path):
    p = Path(path)
    if not p.is_file():
        raise CliError("FileNotFound", str(path))
    try:
        return load_complex(p)
    except ComplexFileError as e:
        raise CliError("ParseError", str(e)) from None
    except NotMedian as e:
        raise CliError("NotMedian", f"triple={','.join(map(str, e.triple))} medians={e.count}") from None
    except CubeComplexError as e:
        raise CliError(type(e).__name__, str(e)) from None


def _vertex(C, v):
    if not 0 <= v < C.n:
        raise CliError("BadVertex", f"{v} not in 0..{C.n - 1}")
    return v


def _ids(mask):
    return " ".join(str(i) for i in np.flatnonzero(mask))


def cmd_validate(args, out):
    C = _load(args.path)
    print(f"ok vertices={C.n} edges={len(C.edges)} hyperplanes={C.num_hyperplanes}", file=out)
    return 0


def cmd_info(args, out):
    C = _load(args.path)
    g = geometry(C)
    pc = constants_for(C)
    rows = [
        ("name", C.name or ""),
        ("vertices", C.n),
        ("edges", len(C.edges)),
        ("hyperplanes", C.num_hyperplanes),
        ("dim_d", g.dim_d),
        ("delta4", _frac(g.delta4)),
        ("grid_D", g.grid_D),
        ("theta", _frac(g.theta)),
        ("R", g.R),
        ("L", pc.L),
        ("N2(L)", fmt_int(pc.N2(pc.L))),
        ("T", fmt_int(pc.T)),
        ("K_bound", f"2^{pc.K_exponent}"),
        ("M_bound", f"{fmt_int(pc.M_coefficient)} * 2^{pc.K_exponent}"),
    ]
    for k, v in rows:
        print(f"{k}: {v}", file=out)
    return 0


def cmd_cylinder(args, out):
    C = _load(args.path)
    x, y = _vertex(C, args.x), _vertex(C, args.y)
    cyl = cylinder(C, x, y, args.D)
    print(f"D: {cyl.D}", file=out)
    print(f"interval: {_ids(interval_by_metric(C, x, y))}", file=out)
    print(f"cylinder: {_ids(cyl.vertices)}", file=out)
    print(f"peripheral: {_ids(peripheral(C, x, y))}", file=out)
    print(f"defining_halfspaces: {_ids(cyl.defining_set)}", file=out)
    return 0


def cmd_stability(args, out):
    C = _load(args.path)
    rep = stability_sweep(C, D=args.D, R=args.R, mode=args.mode, count=args.count,
                          seed=args.seed, workers=args.workers)
    text = rep.to_json()
    if args.out:
        Path(args.out).write_text(text)
    print(f"triples={rep.triples_checked} failures={len(rep.failures)} "
          f"max_empirical_k={rep.max_empirical_k} "
          f"max_projection_difference={rep.max_projection_difference} "
          f"D={rep.D} d={rep.d} R={rep.R}", file=out)
    return 0 if rep.ok else 1


GEN_KINDS = {
    "tree": (1, lambda p, a: generators.gen_tree(p[0], a.seed)),
    "path": (1, lambda p, a: generators.gen_path(p[0])),
    "hypercube": (1, lambda p, a: generators.gen_hypercube(p[0])),
    "grid": (2, lambda p, a: generators.gen_grid(p[0], p[1])),
    "staircase": (1, lambda p, a: generators.gen_staircase(p[0])),
    "dual": (1, lambda p, a: generators.gen_random_dual(p[0], a.seed, a.nest_prob)),
}


def cmd_gen(args, out):
    arity, make = GEN_KINDS[args.kind]
    if len(args.params) != arity:
        raise CliError("BadArguments", f"{args.kind} takes {arity} integer parameter(s)")
    try:
        C = make(args.params, args)
    except (ValueError, CubeComplexError) as e:
        raise CliError(type(e).__name__, str(e)) from None
    if args.out:
        save_complex(C, args.out)
    else:
        from .io import dumps_complex
        out.write(dumps_complex(C))
    return 0


def cmd_export_dot(args, out):
    C = _load(args.path)
    kw = {}
    if args.highlight:
        x, y = (_vertex(C, v) for v in args.highlight)
        kw = dict(cylinder=cylinder(C, x, y, args.D).vertices,
                  interval=interval_by_metric(C, x, y), endpoints=(x, y))
    text = to_dot(C, **kw)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="cubecyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="load and validate a complex file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", help="geometry constants of a complex")
    s.add_argument("path")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("cylinder", help="interval and cylinder of a pair")
    s.add_argument("path")
    s.add_argument("x", type=int)
    s.add_argument("y", type=int)
    s.add_argument("--D", type=int, default=None)
    s.set_defaults(func=cmd_cylinder)

    s = sub.add_parser("stability", help="stability sweep over triples")
    s.add_argument("path")
    s.add_argument("--D", type=int, default=None)
    s.add_argument("--R", type=int, default=None)
    s.add_argument("--mode", choices=("all", "sample"), default="all")
    s.add_argument("--count", type=int, default=10000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", default=None, help="write the JSON report here")
    s.set_defaults(func=cmd_stability)

    s = sub.add_parser("gen", help="generate a complex file")
    s.add_argument("kind", choices=sorted(GEN_KINDS))
    s.add_argument("params", type=int, nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--nest-prob", type=float, default=0.7)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export-dot", help="DOT rendering, optionally highlighting a cylinder")
    s.add_argument("path")
    s.add_argument("--highlight", type=int, nargs=2, metavar=("X", "Y"))
    s.add_argument("--D", type=int, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except CliError as e:
        print(f"error: {e.kind}: {e.detail}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
