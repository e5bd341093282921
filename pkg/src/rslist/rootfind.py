"""y-roots of bivariate polynomials by coefficient peeling.

Finds every ``h`` in F[x] with ``deg h < k`` and ``Q(x, h(x)) = 0``. The
coefficients of ``h`` are recovered one at a time: divide out the largest
power of x, take the roots ``g`` of ``Q(0, y)`` by scanning the field, and
recurse on ``Q(x, x*y + g)``.
"""
from __future__ import annotations

from .errors import ZeroPolynomial
from .poly import UniPoly
from .wpoly import BiPoly


def _field_roots(Q: BiPoly) -> list[int]:
    F = Q.field
    coeffs = [row[0] for row in Q.rows]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    lowest = UniPoly._raw(F, coeffs)
    return [g for g in F.elements() if lowest.eval(g) == 0]


def _substitute(Q: BiPoly, g: int) -> BiPoly:
    """``Q(x, x*y + g)``."""
    shifted = Q.shift_y(g)
    return BiPoly(Q.field, [row.shift(j) for j, row in enumerate(shifted.rows)])


def y_roots(Q: BiPoly, k: int) -> list[UniPoly]:
    if Q.is_zero():
        raise ZeroPolynomial("every polynomial is a root of the zero polynomial")
    F = Q.field
    found: list[UniPoly] = []

    def walk(P: BiPoly, prefix: list[int]) -> None:
        t = P.x_order()
        if t:
            P = P.divide_x(int(t))
        for g in _field_roots(P):
            coeffs = prefix + [g]
            if len(coeffs) == k:
                found.append(UniPoly(F, coeffs))
            else:
                walk(_substitute(P, g), coeffs)

    walk(Q, [])
    # spurious branches are dropped by a full substitution check
    out = []
    seen = set()
    for h in found:
        if h.coeffs not in seen and Q.eval_y(h).is_zero():
            seen.add(h.coeffs)
            out.append(h)
    out.sort(key=lambda h: (len(h.coeffs), h.coeffs[::-1]))
    return out
