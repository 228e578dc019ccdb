"""The bivariate polynomial sequence, its integer shadow, specializations,
and the five-way cross-check.

The sequence G(p, n) is defined by G(p, 0) = 0, G(p, n) = x^(n-1) for
1 <= n <= p + 1, and G(p, n) = x*G(p, n-1) + y*G(p, n-p-1) afterwards.
Four matrix routes recover G(p, n+1) as det(W), det(M), per(H), per(K) of
the order-n matrices; cross_check runs all five and compares exactly.

Named specializations substitute fixed polynomials for x and y (and
optionally shift the index) to recover classical families: Fibonacci,
Pell, Jacobsthal, and second-kind Chebyshev.
"""

from __future__ import annotations

from dataclasses import dataclass

from .evaluators import det_hessenberg, per_hessenberg
from .matrices import build_h, build_k, build_m, build_w
from .ring import ONE, X, Y, BivarPoly, ZERO

ROUTES = ("recurrence", "det-w", "det-m", "per-h", "per-k")


def f_poly(p: int, n: int) -> BivarPoly:
    """n-th term of the coefficiented recurrence for parameter p."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return f_poly_prefix(p, n)[n]


def f_poly_prefix(p: int, n: int) -> list[BivarPoly]:
    """Terms 0..n as a list."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    terms = [ZERO]
    for k in range(1, n + 1):
        if k <= p + 1:
            terms.append(BivarPoly.monomial(1, k - 1, 0))
        else:
            terms.append(X * terms[k - 1] + Y * terms[k - p - 1])
    return terms


def fib_p_number(p: int, n: int) -> int:
    """Integer sequence with p+1 leading ones, a(n) = a(n-1) + a(n-p-1)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    vals = [0] + [1] * min(n, p + 1)
    for k in range(p + 2, n + 1):
        vals.append(vals[k - 1] + vals[k - p - 1])
    return vals[n]


@dataclass(frozen=True)
class FamilySpec:
    """A named specialization: substitutions for x and y, a fixed p or
    None for p-parameterized rows, and an index shift so that
    family(n) = substitute(G(p, n + index_offset))."""

    name: str
    xsub: BivarPoly
    ysub: BivarPoly
    p: int | None
    index_offset: int = 0


_TWO_X = X.scale(2)
_TWO_Y = Y.scale(2)

FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in (
        FamilySpec("fibonacci-bivariate", X, Y, 1),
        FamilySpec("fibonacci-p-poly", X, ONE, None),
        FamilySpec("fibonacci-poly", X, ONE, 1),
        FamilySpec("fibonacci-p-numbers", ONE, ONE, None),
        FamilySpec("fibonacci-numbers", ONE, ONE, 1),
        FamilySpec("pell-bivariate-p", _TWO_X, Y, None),
        FamilySpec("pell-bivariate", _TWO_X, Y, 1),
        FamilySpec("pell-p-poly", _TWO_X, ONE, None),
        FamilySpec("pell-poly", _TWO_X, ONE, 1),
        FamilySpec("pell-numbers", BivarPoly.constant(2), ONE, 1),
        FamilySpec("chebyshev-U", _TWO_X, -ONE, 1, index_offset=1),
        FamilySpec("jacobsthal-bivariate-p", X, _TWO_Y, None),
        FamilySpec("jacobsthal-bivariate", X, _TWO_Y, 1),
        FamilySpec("jacobsthal-poly", ONE, _TWO_Y, 1),
        FamilySpec("jacobsthal-numbers", ONE, BivarPoly.constant(2), 1),
    )
}


def family_value(spec: FamilySpec, n: int, p: int | None = None) -> BivarPoly:
    """n-th member of a specialization family.

    ``p`` is required for p-parameterized families and ignored otherwise.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if spec.p is not None:
        eff_p = spec.p
    elif p is not None:
        eff_p = p
    else:
        raise ValueError(f"family {spec.name!r} needs an explicit p")
    base = f_poly(eff_p, n + spec.index_offset)
    return base.substitute(spec.xsub, spec.ysub)


def get_family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        available = ", ".join(sorted(FAMILIES))
        raise KeyError(f"unknown family {name!r}; available: {available}") from None


@dataclass(frozen=True)
class CrossCheckReport:
    """The five route values for one (p, n) and their agreement verdict."""

    p: int
    n: int
    values: dict[str, BivarPoly]
    all_equal: bool
    first_mismatch: tuple[str, str] | None


def cross_check(p: int, n: int) -> CrossCheckReport:
    """Compare the recurrence value G(p, n+1) with all four order-n
    matrix routes."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    values = {
        "recurrence": f_poly(p, n + 1),
        "det-w": det_hessenberg(build_w(p, n)),
        "det-m": det_hessenberg(build_m(p, n)),
        "per-h": per_hessenberg(build_h(p, n)),
        "per-k": per_hessenberg(build_k(p, n)),
    }
    first_mismatch = None
    names = list(values)
    for a_idx in range(len(names)):
        for b_idx in range(a_idx + 1, len(names)):
            if values[names[a_idx]] != values[names[b_idx]]:
                first_mismatch = (names[a_idx], names[b_idx])
                break
        if first_mismatch:
            break
    return CrossCheckReport(p, n, values, first_mismatch is None, first_mismatch)
