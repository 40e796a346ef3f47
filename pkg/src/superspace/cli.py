"""Command line front end.

Every subcommand is a thin adapter: parse the input, call the library,
print the result as canonical JSON.  Exit codes: 0 success, 1 a check or
verification failed, 2 usage or input-format error, 3 math-domain error
(singular matrix, point off the quadric, outside the big cell, ...).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import conformal, geometry, realform, serialization, superflag
from .conformal import AlgebraElement
from .errors import InputFormatError, MathDomainError, StructureError
from .exprparse import parse_expression
from .grassmann import GaussianRational, GrassmannAlgebra, SuperNumber
from .realform import DEFAULT_J_SIGN, ConjugationConfig
from .supermatrix import EVEN, SuperMatrix
from .verify import SUITE_ORDER, run_suites

CONFIG_NAME = "superspace.toml"
_CONFIG_KEYS = ("j_sign", "seed", "algebra_q")


# ---------------------------------------------------------------------------
# config file: plain "key = value" lines


def load_config(path: Path) -> dict[str, str]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read config {path}: {exc}") from None
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InputFormatError(f"{path}:{lineno}: expected key = value")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise InputFormatError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value.strip().strip('"').strip("'")
    return out


def _config_map(args) -> dict[str, str]:
    if getattr(args, "config", None):
        return load_config(Path(args.config))
    default = Path(CONFIG_NAME)
    if default.is_file():
        return load_config(default)
    return {}


def _resolve_j(args, cfgmap: dict[str, str]) -> ConjugationConfig:
    sign = getattr(args, "j", None) or cfgmap.get("j_sign") or DEFAULT_J_SIGN
    return ConjugationConfig(sign)


def _config_int(cfgmap: dict[str, str], key: str) -> int | None:
    if key not in cfgmap:
        return None
    try:
        return int(cfgmap[key])
    except ValueError:
        raise InputFormatError(f"config key {key} must be an integer") from None


def _resolve_seed(args, cfgmap: dict[str, str]) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    found = _config_int(cfgmap, "seed")
    return 0 if found is None else found


def _resolve_q(args, cfgmap: dict[str, str]) -> int:
    q = getattr(args, "algebra_q", None)
    if q is None:
        q = _config_int(cfgmap, "algebra_q")
    if q is None:
        q = 8
    if q < 0 or q % 2:
        raise InputFormatError("algebra size must be an even nonnegative integer")
    return q


# ---------------------------------------------------------------------------
# input plumbing


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None


def _load_json(args):
    return serialization.loads(_read_text(args.json))


def _require_one_input(args) -> None:
    has_json = getattr(args, "json", None) is not None
    has_expr = getattr(args, "expr", None) is not None
    if has_json == has_expr:
        raise InputFormatError("provide exactly one of --json or --expr")


def _split_rows(text: str) -> list[str]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InputFormatError("matrix text must look like [[...],[...]]")
    inner = s[1:-1]
    rows: list[str] = []
    depth = 0
    start = 0
    for k, ch in enumerate(inner):
        if ch == "[":
            if depth == 0:
                start = k + 1
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise InputFormatError("unbalanced brackets in matrix text")
            if depth == 0:
                rows.append(inner[start:k])
        elif depth == 0 and not ch.isspace() and ch != ",":
            raise InputFormatError(f"unexpected {ch!r} between matrix rows")
    if depth != 0:
        raise InputFormatError("unbalanced brackets in matrix text")
    if not rows:
        raise InputFormatError("matrix text has no rows")
    return rows


def _matrix_exprs(text: str, algebra: GrassmannAlgebra) -> list[list[SuperNumber]]:
    return [
        [parse_expression(cell, algebra) for cell in row.split(",")]
        for row in _split_rows(text)
    ]


def _vector_exprs(text: str, algebra: GrassmannAlgebra) -> list[SuperNumber]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InputFormatError("vector text must look like [a, b, ...]")
    return [parse_expression(cell, algebra) for cell in s[1:-1].split(",")]


def _scalar(x: SuperNumber) -> GaussianRational:
    return x.body


def _parse_shape(text: str) -> tuple[int, int]:
    parts = text.split("|")
    try:
        m, n = (int(p) for p in parts)
    except ValueError:
        raise InputFormatError(f"bad shape {text!r}, expected like 4|1") from None
    if m < 0 or n < 0 or m + n == 0:
        raise InputFormatError(f"bad shape {text!r}")
    return m, n


def _load_supermatrix(args, cfgmap) -> SuperMatrix:
    _require_one_input(args)
    if args.json is not None:
        return serialization.supermatrix_from_obj(_load_json(args))
    algebra = GrassmannAlgebra.paired(_resolve_q(args, cfgmap) // 2)
    m, n = _parse_shape(args.shape)
    return SuperMatrix((m, n), _matrix_exprs(args.expr, algebra), EVEN)


def _load_rational_matrix(args, rows: int | None, cols: int | None):
    _require_one_input(args)
    if args.json is not None:
        return serialization.ratmatrix_from_obj(_load_json(args), rows, cols)
    scalars = GrassmannAlgebra(0)
    out = tuple(
        tuple(_scalar(x) for x in row) for row in _matrix_exprs(args.expr, scalars)
    )
    if rows is not None and (
        len(out) != rows or any(len(r) != cols for r in out)
    ):
        raise InputFormatError(f"expected a {rows}x{cols} matrix")
    return out


def _load_six_vector(args) -> tuple[GaussianRational, ...]:
    _require_one_input(args)
    if args.json is not None:
        obj = _load_json(args)
        raw = obj.get("y") if isinstance(obj, dict) else None
        if not isinstance(raw, list) or len(raw) != 6:
            raise InputFormatError('expected {"y": [six coordinates]}')
        return tuple(serialization.gr_from_obj(c) for c in raw)
    scalars = GrassmannAlgebra(0)
    vec = tuple(_scalar(x) for x in _vector_exprs(args.expr, scalars))
    if len(vec) != 6:
        raise InputFormatError("expected six coordinates")
    return vec


def _element_rows(x: AlgebraElement):
    return tuple(tuple(x.entry(i, j) for j in range(5)) for i in range(5))


def _element_to_obj(x: AlgebraElement) -> list:
    return serialization.ratmatrix_to_obj(_element_rows(x))


def _load_element(args) -> AlgebraElement:
    return AlgebraElement.from_rational(_load_rational_matrix(args, 5, 5))


def _emit(obj) -> None:
    print(serialization.dumps(obj))


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_ber(args) -> int:
    cfgmap = _config_map(args)
    g = _load_supermatrix(args, cfgmap)
    _emit(serialization.supernumber_to_obj(g.berezinian()))
    return 0


def cmd_bracket(args) -> int:
    obj = _load_json(args)
    x = AlgebraElement.from_rational(
        serialization.ratmatrix_from_obj(serialization._field(obj, "x"), 5, 5)
    )
    y = AlgebraElement.from_rational(
        serialization.ratmatrix_from_obj(serialization._field(obj, "y"), 5, 5)
    )
    _emit(_element_to_obj(conformal.bracket(x, y)))
    return 0


def cmd_decompose(args) -> int:
    x = _load_element(args)
    p_part, n_part = conformal.split_pn(x)
    _emit({"p": _element_to_obj(p_part), "n": _element_to_obj(n_part)})
    return 0


def cmd_sigma(args) -> int:
    x = _load_element(args)
    _emit(_element_to_obj(realform.sigma(x)))
    return 0


def cmd_xi(args) -> int:
    cfgmap = _config_map(args)
    cfg = _resolve_j(args, cfgmap)
    g = _load_supermatrix(args, cfgmap)
    _emit(serialization.supermatrix_to_obj(realform.xi_group(g, cfg)))
    return 0


def cmd_plucker(args) -> int:
    _require_one_input(args)
    if args.json is not None:
        plane = serialization.plane_from_obj(_load_json(args))
    else:
        scalars = GrassmannAlgebra(0)
        rows = tuple(
            tuple(_scalar(x) for x in row)
            for row in _matrix_exprs(args.expr, scalars)
        )
        plane = geometry.Plane(rows)
    _emit(serialization.plucker_to_obj(geometry.plucker(plane)))
    return 0


def cmd_klein_check(args) -> int:
    y = _load_six_vector(args)
    value = geometry.klein_form(y)
    _emit({"on_quadric": value.is_zero(), "value": serialization.gr_to_obj(value)})
    return 0 if value.is_zero() else 1


def cmd_cone(args) -> int:
    y = _load_six_vector(args)
    point = geometry.PluckerPoint(y)
    _emit({"region": geometry.cone_region(point)})
    return 0


def cmd_act_poincare(args) -> int:
    obj = _load_json(args)
    h = serialization.poincare_from_obj(serialization._field(obj, "element"))
    chart = serialization.ratmatrix_from_obj(serialization._field(obj, "chart"), 2, 2)
    _emit(serialization.ratmatrix_to_obj(geometry.poincare_act(h, chart)))
    return 0


def cmd_pi(args) -> int:
    cfgmap = _config_map(args)
    g = _load_supermatrix(args, cfgmap)
    _emit(serialization.bigcell_to_obj(superflag.pi_chart(g)))
    return 0


def cmd_act_super(args) -> int:
    obj = _load_json(args)
    h = serialization.superpoincare_from_obj(serialization._field(obj, "element"))
    pt = serialization.bigcell_from_obj(serialization._field(obj, "point"))
    _emit(serialization.bigcell_to_obj(superflag.superpoincare_act(h, pt)))
    return 0


def cmd_twistor_check(args) -> int:
    cfgmap = _config_map(args)
    g = _load_supermatrix(args, cfgmap)
    ok = superflag.twistor_check(g)
    _emit({"consistent": ok})
    return 0 if ok else 1


def cmd_real_coords(args) -> int:
    cfgmap = _config_map(args)
    cfg = _resolve_j(args, cfgmap)
    pt = serialization.bigcell_from_obj(_load_json(args))
    report = superflag.reality_report(pt, cfg)
    _emit(
        {
            "A_prime": serialization._block_to_obj(superflag.real_coordinates(pt, cfg)),
            "fixed_by_xi": report.fixed_by_xi,
            "a_prime_skew": report.a_prime_skew,
            "beta_condition": report.beta_condition,
            "consistent": report.consistent,
        }
    )
    return 0


def cmd_roots(args) -> int:
    if (args.pattern is None) == (args.json is None):
        raise InputFormatError("provide exactly one of --pattern or --json")
    if args.pattern is not None:
        names = sorted(str(r) for r in conformal.pattern_roots(args.pattern))
        _emit({"pattern": args.pattern, "roots": names})
        return 0
    x = AlgebraElement.from_rational(
        serialization.ratmatrix_from_obj(_load_json(args), 5, 5)
    )
    cartan, components = conformal.root_decomposition(x)
    _emit(
        {
            "cartan": _element_to_obj(cartan),
            "components": {
                str(root): _element_to_obj(part) for root, part in components.items()
            },
        }
    )
    return 0


def cmd_verify(args) -> int:
    cfgmap = _config_map(args)
    cfg = _resolve_j(args, cfgmap)
    seed = _resolve_seed(args, cfgmap)
    algebra_q = _resolve_q(args, cfgmap)
    names = list(args.suites) or ["all"]
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(s for s in SUITE_ORDER if s not in expanded)
        elif name not in expanded:
            expanded.append(name)
    failures = 0
    total = 0
    for suite_name, results in run_suites(
        expanded, seed=seed, algebra_q=algebra_q, j_sign=cfg.j_sign, full=args.full
    ):
        print(f"== {suite_name}")
        for r in results:
            total += 1
            tag = "PASS" if r.passed else "FAIL"
            line = f"{tag} {r.name}"
            if r.detail:
                line += f" ({r.detail})"
            print(line)
            if not r.passed:
                failures += 1
    print(f"{total - failures} passed, {failures} failed")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE",
                   help=f"key = value config file (default: ./{CONFIG_NAME} if present)")


def _add_j_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--j", choices=("+i", "-i"),
                   help="conjugation sign (write --j=-i); default -i")


def _add_json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="FILE", help="JSON input file, - for stdin")


def _add_expr_matrix_flags(p: argparse.ArgumentParser, shape: str) -> None:
    p.add_argument("--expr", metavar="TEXT",
                   help="matrix of expressions, like [[1 + x1*x2, x1],[x2, 2]]")
    p.add_argument("--shape", default=shape, metavar="M|N",
                   help=f"block shape for --expr input (default {shape})")
    p.add_argument("--algebra-q", type=int, metavar="Q", dest="algebra_q",
                   help="even generator count for --expr input (default 8)")


def _add_expr_scalar_flag(p: argparse.ArgumentParser, what: str) -> None:
    p.add_argument("--expr", metavar="TEXT", help=f"{what} of scalar expressions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superspace",
        description="Exact supergeometry calculator: Grassmann numbers, "
        "supermatrices, the conformal superalgebra, quadric geometry and "
        "the big cell of the super flag.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ber", help="Berezinian of an even supermatrix")
    _add_json_flag(p)
    _add_expr_matrix_flags(p, "1|1")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_ber)

    p = sub.add_parser("bracket", help="superbracket of two 5x5 scalar elements")
    p.add_argument("--json", metavar="FILE", required=True,
                   help='JSON {"x": 5x5, "y": 5x5}, - for stdin')
    p.set_defaults(handler=cmd_bracket)

    p = sub.add_parser("decompose",
                       help="split a supertrace-zero element into parabolic + translation parts")
    _add_json_flag(p)
    _add_expr_scalar_flag(p, "5x5 matrix")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("sigma", help="antilinear conjugation of a 5x5 scalar element")
    _add_json_flag(p)
    _add_expr_scalar_flag(p, "5x5 matrix")
    p.set_defaults(handler=cmd_sigma)

    p = sub.add_parser("xi", help="group conjugation of an invertible even supermatrix")
    _add_json_flag(p)
    _add_expr_matrix_flags(p, "4|1")
    _add_j_flag(p)
    _add_config_flags(p)
    p.set_defaults(handler=cmd_xi)

    p = sub.add_parser("plucker", help="quadric coordinates of a rank-2 plane")
    p.add_argument("--json", metavar="FILE",
                   help='JSON {"entries": 4x2 matrix}, - for stdin')
    _add_expr_scalar_flag(p, "4x2 matrix")
    p.set_defaults(handler=cmd_plucker)

    p = sub.add_parser("klein-check",
                       help="evaluate the quadric form on six coordinates (exit 1 off the quadric)")
    p.add_argument("--json", metavar="FILE", help='JSON {"y": [six values]}, - for stdin')
    _add_expr_scalar_flag(p, "vector [y12, y23, y31, y14, y24, y34]")
    p.set_defaults(handler=cmd_klein_check)

    p = sub.add_parser("cone", help="stratum of a quadric point")
    p.add_argument("--json", metavar="FILE", help='JSON {"y": [six values]}, - for stdin')
    _add_expr_scalar_flag(p, "vector [y12, y23, y31, y14, y24, y34]")
    p.set_defaults(handler=cmd_cone)

    p = sub.add_parser("act-poincare", help="affine action on a 2x2 chart")
    p.add_argument("--json", metavar="FILE", required=True,
                   help='JSON {"element": {L,R,N}, "chart": 2x2}, - for stdin')
    p.set_defaults(handler=cmd_act_poincare)

    p = sub.add_parser("pi", help="big-cell chart (A, alpha, beta) of an even supermatrix")
    _add_json_flag(p)
    _add_expr_matrix_flags(p, "4|1")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_pi)

    p = sub.add_parser("act-super", help="affine super action on a big-cell point")
    p.add_argument("--json", metavar="FILE", required=True,
                   help='JSON {"element": {L,R,N,chi,varphi,d}, "point": {A,alpha,beta}}')
    p.set_defaults(handler=cmd_act_super)

    p = sub.add_parser("twistor-check",
                       help="check the two flag charts differ by beta alpha (exit 1 on mismatch)")
    _add_json_flag(p)
    _add_expr_matrix_flags(p, "4|1")
    _add_config_flags(p)
    p.set_defaults(handler=cmd_twistor_check)

    p = sub.add_parser("real-coords",
                       help="shifted chart A + (j/2) dagger(alpha) alpha and the reality report")
    p.add_argument("--json", metavar="FILE", required=True,
                   help="JSON big-cell point {A, alpha, beta}, - for stdin")
    _add_j_flag(p)
    _add_config_flags(p)
    p.set_defaults(handler=cmd_real_coords)

    p = sub.add_parser("roots", help="root lists of a pattern, or a root decomposition")
    p.add_argument("--pattern", choices=sorted(conformal.PATTERNS),
                   help="named subspace pattern")
    p.add_argument("--json", metavar="FILE", help="5x5 scalar matrix, - for stdin")
    p.set_defaults(handler=cmd_roots)

    p = sub.add_parser("verify", help="run the identity check suites")
    p.add_argument("suites", nargs="*", metavar="SUITE",
                   help=f"any of: all {' '.join(SUITE_ORDER)} (default all)")
    p.add_argument("--seed", type=int, help="sample seed (default 0)")
    p.add_argument("--algebra-q", type=int, metavar="Q", dest="algebra_q",
                   help="even generator count for sampled supernumbers (default 8)")
    p.add_argument("--full", action="store_true",
                   help="exhaustive variant of the slowest checks")
    _add_j_flag(p)
    _add_config_flags(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.handler is cmd_verify:
        bad = [s for s in args.suites if s != "all" and s not in SUITE_ORDER]
        if bad:
            parser.error(f"unknown suite {bad[0]!r}")
    try:
        return args.handler(args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
