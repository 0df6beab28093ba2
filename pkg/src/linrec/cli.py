"""Command-line front end.

Every subcommand reads elements given with ``--spec FILE`` or
``--inline JSON`` (repeatable, consumed in order) and prints text, or JSON
with ``--json``.  Exit codes: 0 success, 1 failed check, 2 usage error,
3 parse error, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .errors import DomainError, ParseError, VerificationFailure
from .filtration import (
    cauchy_jdeg,
    degree_json,
    format_witness_table,
    ideg,
    jdeg,
    witness_rows_json,
    witness_table,
)
from .genfun import egf_trunc, ogf_from_recurrence
from .hopf_checks import CHECKS
from .normal_form import nf_antipode, nf_comul, nf_counit, nf_mul, nf_truncate
from .polynomial import format_poly
from .sampling import random_normal_form
from .scalar import format_scalar
from .sequences import (
    berlekamp_massey,
    cauchy_product,
    hurwitz_product,
    product_recurrence,
    zeta,
)
from .serialize import (
    element_json,
    load_element,
    parse_element,
    recurrence_json,
    to_normal_form,
    to_recurrence,
    to_terms,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3, 4


@dataclass
class CommandResult:
    text: str
    payload: object = None
    exit_code: int = EXIT_OK
    as_json: bool = False

    def render(self) -> str:
        if self.as_json and self.payload is not None:
            return json.dumps(self.payload, indent=2, ensure_ascii=False)
        return self.text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


# element arguments


def _add_elements(p):
    p.add_argument("--spec", dest="elements", action="append", type=lambda s: ("file", s),
                   default=[], metavar="FILE", help="element JSON file (repeatable)")
    p.add_argument("--inline", dest="elements", action="append", type=lambda s: ("inline", s),
                   metavar="JSON", help="element JSON given inline (repeatable)")


def _elements(args, n: int):
    if len(args.elements) != n:
        raise UsageError(f"{args.command}: expected {n} element(s), got {len(args.elements)}")
    out = []
    for source, value in args.elements:
        out.append(load_element(value) if source == "file" else parse_element(value))
    return out


def _join(values) -> str:
    return ", ".join(format_scalar(v) for v in values)


# subcommands


def cmd_terms(args):
    (spec,) = _elements(args, 1)
    values = to_terms(spec, args.count)
    return CommandResult(_join(values), element_json(values))


def _cmd_product(args, mode):
    x, y = _elements(args, 2)
    mul = hurwitz_product if mode == "hurwitz" else cauchy_product
    values = mul(to_terms(x, args.count), to_terms(y, args.count))
    payload = {"mode": mode, "terms": [format_scalar(v) for v in values], "recurrence": None}
    text = _join(values)
    if not (x.prefix_only or y.prefix_only):
        rec = product_recurrence(to_recurrence(x), to_recurrence(y), mode)
        payload["recurrence"] = recurrence_json(rec)["recurrence"]
        text += f"\nrecurrence: {rec}"
    return CommandResult(text, payload)


def cmd_hurwitz(args):
    return _cmd_product(args, "hurwitz")


def cmd_cauchy(args):
    return _cmd_product(args, "cauchy")


def cmd_zeta(args):
    (spec,) = _elements(args, 1)
    values = zeta(to_terms(spec, args.count), "inverse" if args.inverse else "forward")
    return CommandResult(_join(values), element_json(values))


def cmd_bm(args):
    (spec,) = _elements(args, 1)
    if spec.prefix_only and args.count is None:
        values = to_terms(spec, len(spec.value) if spec.kind == "terms" else spec.value.order + 1)
    else:
        values = to_terms(spec, args.count if args.count is not None else 16)
    rec = berlekamp_massey(values)
    return CommandResult(f"order {rec.order}: {rec}", element_json(rec))


def cmd_nf(args):
    (spec,) = _elements(args, 1)
    f = to_normal_form(spec)
    return CommandResult(str(f), element_json(f))


def cmd_rec(args):
    (spec,) = _elements(args, 1)
    rec = to_recurrence(spec)
    return CommandResult(str(rec), element_json(rec))


def cmd_ogf(args):
    (spec,) = _elements(args, 1)
    g = spec.value if spec.kind == "ogf" else ogf_from_recurrence(to_recurrence(spec))
    return CommandResult(f"({format_poly(g.num)}) / ({format_poly(g.den)})", element_json(g))


def cmd_egf(args):
    (spec,) = _elements(args, 1)
    series = egf_trunc(to_normal_form(spec), args.order)
    return CommandResult(_join(series.coeffs) + f"  (mod Z^{args.order + 1})", element_json(series))


def cmd_mul(args):
    x, y = _elements(args, 2)
    f = nf_mul(to_normal_form(x), to_normal_form(y))
    return CommandResult(str(f), element_json(f))


def cmd_delta(args):
    (spec,) = _elements(args, 1)
    t = nf_comul(to_normal_form(spec))
    lines = []
    for ((lk, ll), (rk, rl)), c in t.items():
        lines.append(f"{format_scalar(c)} * (xi^{lk} phi[{format_scalar(ll)}]) (x) (xi^{rk} phi[{format_scalar(rl)}])")
    return CommandResult("\n".join(lines) or "0", element_json(t))


def cmd_antipode(args):
    (spec,) = _elements(args, 1)
    f = nf_antipode(to_normal_form(spec))
    return CommandResult(str(f), element_json(f))


def cmd_counit(args):
    (spec,) = _elements(args, 1)
    c = nf_counit(to_normal_form(spec))
    return CommandResult(format_scalar(c), {"counit": format_scalar(c)})


def cmd_truncate(args):
    (spec,) = _elements(args, 1)
    f = nf_truncate(to_normal_form(spec), args.n)
    return CommandResult(str(f), element_json(f))


def cmd_ideg(args):
    (spec,) = _elements(args, 1)
    d = ideg(to_normal_form(spec))
    return CommandResult(str(degree_json(d)), {"ideg": degree_json(d)})


def cmd_jdeg(args):
    (spec,) = _elements(args, 1)
    d = jdeg(to_normal_form(spec))
    return CommandResult(str(degree_json(d)), {"jdeg": degree_json(d)})


def cmd_cjdeg(args):
    (spec,) = _elements(args, 1)
    d = cauchy_jdeg(to_recurrence(spec))
    return CommandResult(str(degree_json(d)), {"cauchy_jdeg": degree_json(d)})


def cmd_witness(args):
    rows = witness_table(args.max_n)
    return CommandResult(format_witness_table(rows), witness_rows_json(rows))


def demo_zeta_escape(max_terms: int = 16) -> CommandResult:
    """Berlekamp-Massey orders of prefixes of (1/n!) at lengths 4, 8, ..., max_terms."""
    if max_terms < 8:
        raise UsageError("demo-zeta: --max-terms must be at least 8")
    lengths = list(range(4, max_terms + 1, 4))
    scaled = zeta((1,) * max_terms)
    orders = [berlekamp_massey(scaled[:m]).order for m in lengths]
    baseline = [berlekamp_massey((1,) * m).order for m in lengths]
    increasing = all(a < b for a, b in zip(orders, orders[1:]))
    lines = ["length  order(1/n!)  order(1)"]
    lines += [f"{m:>6}  {o:>11}  {b:>8}" for m, o, b in zip(lengths, orders, baseline)]
    lines.append("strictly increasing: " + ("yes" if increasing else "no"))
    payload = {
        "orders": [{"length": m, "order": o} for m, o in zip(lengths, orders)],
        "baseline": [{"length": m, "order": b} for m, b in zip(lengths, baseline)],
        "strictly_increasing": increasing,
    }
    return CommandResult("\n".join(lines), payload)


def cmd_demo_zeta(args):
    return demo_zeta_escape(args.max_terms)


def cmd_hopf_check(args):
    rng = random.Random(args.seed)
    failures = {name: 0 for name in CHECKS}
    for _ in range(args.samples):
        f = random_normal_form(rng, max_support=args.max_support)
        for name, check in CHECKS.items():
            if not check(f):
                failures[name] += 1
    ok = not any(failures.values())
    lines = [f"{name:<18} {args.samples - n}/{args.samples} passed" for name, n in failures.items()]
    payload = {"samples": args.samples, "seed": args.seed, "failures": failures, "ok": ok}
    return CommandResult("\n".join(lines), payload, EXIT_OK if ok else EXIT_CHECK_FAILED)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linrec", description="Exact algebra of linearly recursive sequences.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help, elements=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        if elements:
            _add_elements(p)
        p.set_defaults(func=func)
        return p

    add("terms", cmd_terms, "first terms of a sequence").add_argument("--count", type=int, default=10)
    for name, func in (("hurwitz", cmd_hurwitz), ("cauchy", cmd_cauchy)):
        add(name, func, f"{name} product of two sequences").add_argument("--count", type=int, default=10)
    p = add("zeta", cmd_zeta, "divide (or multiply) term n by n!")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--inverse", action="store_true")
    add("bm", cmd_bm, "Berlekamp-Massey on the first terms").add_argument("--count", type=int, default=None)
    add("nf", cmd_nf, "normal form over xi and phi_lambda")
    add("rec", cmd_rec, "recurrence form")
    add("ogf", cmd_ogf, "rational ordinary generating function")
    add("egf", cmd_egf, "truncated exponential generating series").add_argument("--order", type=int, default=10)
    add("mul", cmd_mul, "Hurwitz product in normal form")
    add("delta", cmd_delta, "comultiplication")
    add("antipode", cmd_antipode, "antipode")
    add("counit", cmd_counit, "counit (0-th term)")
    add("truncate", cmd_truncate, "sum_{k<n} f(e_k) xi^k").add_argument("--n", type=int, required=True)
    add("ideg", cmd_ideg, "induced (power-series) degree")
    add("jdeg", cmd_jdeg, "J-adic degree")
    add("cjdeg", cmd_cjdeg, "Cauchy-adic degree (leading zeros)")
    add("witness", cmd_witness, "degree table of phi_1 - sum_{k<n} xi^k/k!", elements=False).add_argument(
        "--max-n", type=int, default=10)
    add("demo-zeta", cmd_demo_zeta, "zeta does not preserve linear recursiveness", elements=False).add_argument(
        "--max-terms", type=int, default=16)
    p = add("hopf-check", cmd_hopf_check, "Hopf axioms on random elements", elements=False)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-support", type=int, default=5)
    return parser


def run(argv) -> CommandResult:
    argv = list(argv)
    result = _dispatch(argv)
    if "--json" in argv:
        result.as_json = True
    return result


def _dispatch(argv) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
        for name in ("count", "order", "n", "max_n", "samples", "max_support"):
            value = getattr(args, name, None)
            if value is not None and value < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
        return args.func(args)
    except UsageError as exc:
        return CommandResult(str(exc), {"error": "usage", "message": str(exc)}, EXIT_USAGE)
    except ParseError as exc:
        return CommandResult(f"parse error: {exc}", {"error": "parse", "message": str(exc),
                                                    "offset": exc.offset}, EXIT_PARSE)
    except VerificationFailure:
        raise
    except (DomainError, ZeroDivisionError, ValueError) as exc:
        return CommandResult(f"{type(exc).__name__}: {exc}",
                             {"error": type(exc).__name__, "message": str(exc)}, EXIT_DOMAIN)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = run(argv)
    stream = sys.stdout if result.exit_code in (EXIT_OK, EXIT_CHECK_FAILED) else sys.stderr
    print(result.render(), file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
