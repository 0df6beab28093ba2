"""JSON forms for elements and conversions between representations.

Accepted element objects (exactly one key)::

    {"recurrence": {"coeffs": [s, ...], "initial": [s, ...]}}
    {"terms": [s, ...]}
    {"normal_form": [{"k": 0, "lambda": s, "coeff": s}, ...]}
    {"ogf": {"num": [s, ...], "den": [s, ...]}}
    {"series": {"order": M, "coeffs": [s, ...]}}

where every ``s`` is scalar text (plain JSON integers are also accepted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Any

from .errors import DomainError, ParseError
from .genfun import PowerSeriesTrunc, RationalOGF, ogf_from_recurrence, recurrence_from_ogf
from .normal_form import NormalForm, TensorSum, nf_eval, nf_from_recurrence, nf_to_recurrence
from .scalar import GaussianRational, format_scalar, parse_scalar
from .sequences import RecurrenceSequence, berlekamp_massey, gen_terms

KINDS = ("recurrence", "terms", "normal_form", "ogf", "series")


@dataclass(frozen=True)
class ElementSpec:
    kind: str
    value: Any

    @property
    def prefix_only(self) -> bool:
        """True when the element is only known through finitely many terms."""
        return self.kind in ("terms", "series")


def _scalar(value, path: str) -> GaussianRational:
    if isinstance(value, bool):
        raise ParseError(f"{path}: expected a scalar string, got a boolean")
    if isinstance(value, int):
        return GaussianRational(value)
    if not isinstance(value, str):
        raise ParseError(f"{path}: expected a scalar string, got {type(value).__name__}")
    try:
        return parse_scalar(value)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.message}", offset=exc.offset, text=value) from None


def _scalar_list(value, path: str) -> tuple:
    if not isinstance(value, list):
        raise ParseError(f"{path}: expected a list")
    return tuple(_scalar(v, f"{path}[{i}]") for i, v in enumerate(value))


def _natural(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParseError(f"{path}: expected a non-negative integer")
    return value


def _field(obj, name: str, path: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    if name not in obj:
        raise ParseError(f"{path}: missing key {name!r}")
    return obj[name]


def parse_element(data) -> ElementSpec:
    """Parse an element from a JSON string or an already-decoded object."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", offset=exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError("$: expected a JSON object")
    present = [k for k in KINDS if k in data]
    extra = sorted(set(data) - set(KINDS))
    if extra:
        raise ParseError(f"$: unknown key(s) {', '.join(extra)}")
    if len(present) != 1:
        raise ParseError(f"$: expected exactly one of {', '.join(KINDS)}")
    kind = present[0]
    body = data[kind]
    path = f"$.{kind}"
    if kind == "recurrence":
        coeffs = _scalar_list(_field(body, "coeffs", path), path + ".coeffs")
        initial = _scalar_list(_field(body, "initial", path), path + ".initial")
        if len(coeffs) != len(initial):
            raise ParseError(f"{path}: coeffs and initial differ in length")
        return ElementSpec(kind, RecurrenceSequence(coeffs, initial))
    if kind == "terms":
        return ElementSpec(kind, _scalar_list(body, path))
    if kind == "normal_form":
        if not isinstance(body, list):
            raise ParseError(f"{path}: expected a list")
        items = []
        for i, entry in enumerate(body):
            p = f"{path}[{i}]"
            k = _natural(_field(entry, "k", p), p + ".k")
            lam = _scalar(_field(entry, "lambda", p), p + ".lambda")
            coeff = _scalar(_field(entry, "coeff", p), p + ".coeff")
            items.append(((k, lam), coeff))
        return ElementSpec(kind, NormalForm(items))
    if kind == "ogf":
        num = _scalar_list(_field(body, "num", path), path + ".num")
        den = _scalar_list(_field(body, "den", path), path + ".den")
        if not den or den[0].is_zero():
            raise ParseError(f"{path}.den: constant term must be nonzero")
        return ElementSpec(kind, RationalOGF(num, den))
    order = _natural(_field(body, "order", path), path + ".order")
    coeffs = _scalar_list(_field(body, "coeffs", path), path + ".coeffs")
    if len(coeffs) != order + 1:
        raise ParseError(f"{path}: expected order+1 = {order + 1} coefficients")
    return ElementSpec(kind, PowerSeriesTrunc(coeffs))


def load_element(path: str) -> ElementSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_element(text)
    except ParseError as exc:
        exc.message = f"{path}: {exc.message}"
        raise


# conversions


def _prefix(spec: ElementSpec) -> tuple:
    if spec.kind == "terms":
        return spec.value
    # series coefficients are z_k / k!
    return tuple(c * factorial(k) for k, c in enumerate(spec.value.coeffs))


def to_recurrence(spec: ElementSpec) -> RecurrenceSequence:
    if spec.kind == "recurrence":
        return spec.value
    if spec.kind == "normal_form":
        if spec.value.is_zero():
            return RecurrenceSequence.zero()
        return nf_to_recurrence(spec.value)
    if spec.kind == "ogf":
        return recurrence_from_ogf(spec.value)
    return berlekamp_massey(_prefix(spec))


def to_normal_form(spec: ElementSpec) -> NormalForm:
    if spec.kind == "normal_form":
        return spec.value
    return nf_from_recurrence(to_recurrence(spec))


def to_terms(spec: ElementSpec, count: int) -> tuple:
    if spec.kind == "normal_form":
        return tuple(nf_eval(spec.value, n) for n in range(count))
    if spec.kind == "ogf":
        return spec.value.expand(count - 1).coeffs if count else ()
    if spec.prefix_only:
        prefix = _prefix(spec)
        if count > len(prefix):
            raise DomainError(f"only {len(prefix)} terms are known, {count} requested")
        return prefix[:count]
    return gen_terms(spec.value, count - 1) if count else ()


# output


def scalars_json(values) -> list[str]:
    return [format_scalar(v) for v in values]


def recurrence_json(s: RecurrenceSequence) -> dict:
    return {"recurrence": {"coeffs": scalars_json(s.coeffs), "initial": scalars_json(s.initial)}}


def terms_json(values) -> dict:
    return {"terms": scalars_json(values)}


def normal_form_json(f: NormalForm) -> dict:
    return {
        "normal_form": [
            {"k": k, "lambda": format_scalar(lam), "coeff": format_scalar(c)}
            for (k, lam), c in f.items()
        ]
    }


def ogf_json(g: RationalOGF) -> dict:
    return {"ogf": {"num": scalars_json(g.num), "den": scalars_json(g.den)}}


def series_json(a: PowerSeriesTrunc) -> dict:
    return {"series": {"order": a.order, "coeffs": scalars_json(a.coeffs)}}


def tensor_json(t: TensorSum) -> dict:
    return {
        "tensor": [
            {
                "left": {"k": lk, "lambda": format_scalar(ll)},
                "right": {"k": rk, "lambda": format_scalar(rl)},
                "coeff": format_scalar(c),
            }
            for ((lk, ll), (rk, rl)), c in t.items()
        ]
    }


def element_json(value) -> dict:
    if isinstance(value, RecurrenceSequence):
        return recurrence_json(value)
    if isinstance(value, NormalForm):
        return normal_form_json(value)
    if isinstance(value, RationalOGF):
        return ogf_json(value)
    if isinstance(value, PowerSeriesTrunc):
        return series_json(value)
    if isinstance(value, TensorSum):
        return tensor_json(value)
    if isinstance(value, tuple):
        return terms_json(value)
    raise TypeError(f"no JSON form for {type(value).__name__}")


__all__ = [
    "ElementSpec",
    "element_json",
    "load_element",
    "normal_form_json",
    "ogf_from_recurrence",
    "parse_element",
    "recurrence_json",
    "series_json",
    "tensor_json",
    "terms_json",
    "to_normal_form",
    "to_recurrence",
    "to_terms",
]
