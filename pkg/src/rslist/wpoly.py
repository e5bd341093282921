"""Polynomials in F[x, y] of bounded y-degree, viewed as a free F[x]-module.

A :class:`BiPoly` keeps one univariate row per power of y, ``rows[j]`` being
the coefficient of ``y^j``. The row count is fixed at construction so that a
row index is always a y-exponent, even when high rows are zero.

:class:`WeightedOrder` is the (1, u)-weighted monomial order: monomials are
compared by ``i + u*j`` first and, on a tie, the one with the larger
y-exponent is the larger monomial.
"""
from __future__ import annotations

import math
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import MixedFields, YDegreeOverflow, ZeroPolynomial
from .gf import FieldCtx
from .poly import NEG_INF, UniPoly


class Monomial(NamedTuple):
    i: int  # x-exponent
    j: int  # y-exponent


class WeightedOrder:
    def __init__(self, u: int):
        if u < 1:
            raise ValueError(f"weight of y must be >= 1, got {u}")
        self.u = u

    def __repr__(self) -> str:
        return f"WeightedOrder(u={self.u})"

    def weight(self, mono: Monomial) -> int:
        return mono[0] + self.u * mono[1]

    def key(self, mono: Monomial) -> tuple[int, int]:
        """Sort key realizing the order; larger key means larger monomial."""
        return (mono[0] + self.u * mono[1], mono[1])

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def monomials(self, l: int) -> Iterable[Monomial]:
        """All monomials with y-exponent <= l, ascending, without end."""
        w = 0
        while True:
            for j in range(min(l, w // self.u) + 1):
                yield Monomial(w - self.u * j, j)
            w += 1

    def leading_term(self, f: BiPoly) -> tuple[Monomial, int]:
        best = None
        best_key = None
        for j, row in enumerate(f.rows):
            if row.coeffs:
                d = len(row.coeffs) - 1
                key = (d + self.u * j, j)
                if best_key is None or key > best_key:
                    best_key, best = key, (d, j)
        if best is None:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        d, j = best
        return Monomial(d, j), f.rows[j].coeffs[-1]

    def wdeg(self, f: BiPoly) -> int:
        return self.weight(self.leading_term(f)[0])


def wdeg(order: WeightedOrder, f: BiPoly) -> int:
    return order.wdeg(f)


def compare(order: WeightedOrder, m1: Monomial, m2: Monomial) -> int:
    return order.compare(m1, m2)


def leading_term(order: WeightedOrder, f: BiPoly) -> tuple[Monomial, int]:
    return order.leading_term(f)


class BiPoly:
    __slots__ = ("field", "rows")

    def __init__(self, field: FieldCtx, rows: Sequence[UniPoly]):
        if not rows:
            raise ValueError("a BiPoly needs at least one row")
        for r in rows:
            if r.field != field:
                raise MixedFields(f"row over {r.field!r} in a BiPoly over {field!r}")
        self.field = field
        self.rows = list(rows)

    @classmethod
    def zero(cls, field: FieldCtx, l: int) -> BiPoly:
        return cls(field, [UniPoly.zero(field) for _ in range(l + 1)])

    @classmethod
    def from_uni(cls, g: UniPoly, l: int) -> BiPoly:
        return cls(g.field, [g] + [UniPoly.zero(g.field) for _ in range(l)])

    @classmethod
    def from_terms(cls, field: FieldCtx, l: int, terms: Mapping[tuple[int, int], int]) -> BiPoly:
        """Build from ``{(i, j): coefficient}`` for monomials ``x^i y^j``."""
        rows: list[list[int]] = [[] for _ in range(l + 1)]
        for (i, j), c in terms.items():
            if j > l:
                raise YDegreeOverflow(f"y^{j} does not fit y-degree bound {l}")
            r = rows[j]
            if len(r) <= i:
                r.extend([0] * (i + 1 - len(r)))
            r[i] = field.check(int(c))
        return cls(field, [UniPoly(field, r) for r in rows])

    @classmethod
    def from_rows(cls, field: FieldCtx, rows: Sequence[Sequence[int]], l: int | None = None) -> BiPoly:
        if l is None:
            l = len(rows) - 1
        if len(rows) > l + 1 and any(any(r) for r in rows[l + 1:]):
            raise YDegreeOverflow(f"rows beyond y^{l} are nonzero")
        polys = [UniPoly(field, r) for r in rows[: l + 1]]
        polys += [UniPoly.zero(field) for _ in range(l + 1 - len(polys))]
        return cls(field, polys)

    # -- properties ------------------------------------------------------

    @property
    def l(self) -> int:
        return len(self.rows) - 1

    @property
    def y_degree(self) -> int | float:
        for j in range(len(self.rows) - 1, -1, -1):
            if self.rows[j].coeffs:
                return j
        return NEG_INF

    def is_zero(self) -> bool:
        return not any(r.coeffs for r in self.rows)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coefficient(self, i: int, j: int) -> int:
        return self.rows[j][i] if j < len(self.rows) else 0

    def terms(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): c
            for j, row in enumerate(self.rows)
            for i, c in enumerate(row.coeffs)
            if c
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash(frozenset(self.terms().items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.field!r}, {[list(r.coeffs) for r in self.rows]})"

    def __str__(self) -> str:
        parts = []
        for j in range(len(self.rows) - 1, -1, -1):
            row = self.rows[j]
            if not row.coeffs:
                continue
            ypart = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            if not ypart:
                parts.append(str(row))
            elif row.coeffs == (1,):
                parts.append(ypart)
            elif len([c for c in row.coeffs if c]) == 1:
                parts.append(f"{row}*{ypart}" if row.degree == 0 else f"{row}{ypart}")
            else:
                parts.append(f"({row}){ypart}")
        return " + ".join(parts) if parts else "0"

    # -- module operations -----------------------------------------------

    def _pair(self, other: BiPoly) -> int:
        if self.field != other.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        return max(len(self.rows), len(other.rows))

    def _row(self, j: int) -> UniPoly:
        return self.rows[j] if j < len(self.rows) else UniPoly.zero(self.field)

    def __add__(self, other: BiPoly) -> BiPoly:
        n = self._pair(other)
        return BiPoly(self.field, [self._row(j) + other._row(j) for j in range(n)])

    add = __add__

    def __sub__(self, other: BiPoly) -> BiPoly:
        n = self._pair(other)
        return BiPoly(self.field, [self._row(j) - other._row(j) for j in range(n)])

    def __neg__(self) -> BiPoly:
        return BiPoly(self.field, [-r for r in self.rows])

    def scale(self, c: int) -> BiPoly:
        return BiPoly(self.field, [r.scale(c) for r in self.rows])

    def mul_uni(self, g: UniPoly) -> BiPoly:
        return BiPoly(self.field, [r * g for r in self.rows])

    def shift(self, d: int) -> BiPoly:
        """Multiply by ``x^d``."""
        return BiPoly(self.field, [r.shift(d) for r in self.rows])

    def axpy(self, c: int, other: BiPoly, d: int = 0) -> BiPoly:
        """Return ``self + c * x^d * other``."""
        n = self._pair(other)
        return BiPoly(self.field, [self._row(j).axpy(c, other._row(j), d) for j in range(n)])

    def mul_y(self) -> BiPoly:
        if self.rows[-1].coeffs:
            raise YDegreeOverflow(f"multiplying by y exceeds y-degree bound {self.l}")
        return BiPoly(self.field, [UniPoly.zero(self.field)] + self.rows[:-1])

    def mul_linear_y(self, h: UniPoly) -> BiPoly:
        """Multiply by ``y - h``."""
        if self.rows[-1].coeffs:
            raise YDegreeOverflow(f"multiplying by y exceeds y-degree bound {self.l}")
        rows = self.rows
        out = [-(rows[0] * h)]
        for j in range(1, len(rows)):
            out.append(rows[j - 1] - rows[j] * h)
        return BiPoly(self.field, out)

    def mul(self, other: BiPoly) -> BiPoly:
        """Full product; the result must fit this polynomial's y-degree bound."""
        self._pair(other)
        F = self.field
        l = self.l
        out = [UniPoly.zero(F) for _ in range(l + 1)]
        for a, ra in enumerate(self.rows):
            if not ra:
                continue
            for b, rb in enumerate(other.rows):
                if not rb:
                    continue
                if a + b > l:
                    raise YDegreeOverflow(f"product exceeds y-degree bound {l}")
                out[a + b] = out[a + b] + ra * rb
        return BiPoly(F, out)

    def with_l(self, l: int) -> BiPoly:
        """Same polynomial with a different y-degree bound."""
        if self.y_degree > l:
            raise YDegreeOverflow(f"y-degree {self.y_degree} exceeds {l}")
        F = self.field
        rows = self.rows[: l + 1] + [UniPoly.zero(F) for _ in range(l + 1 - len(self.rows))]
        return BiPoly(F, rows)

    # -- substitutions ---------------------------------------------------

    def eval_y(self, h: UniPoly) -> UniPoly:
        """Substitute ``y := h(x)`` (Horner in y)."""
        acc = UniPoly.zero(self.field)
        for row in reversed(self.rows):
            acc = acc * h + row
        return acc

    def eval_point(self, a: int, b: int) -> int:
        F = self.field
        acc = 0
        for row in reversed(self.rows):
            acc = F.add(F.mul(acc, b), row.eval(a))
        return acc

    def shift_y(self, b: int) -> BiPoly:
        """Return ``f(x, y + b)``."""
        if b == 0:
            return self
        rows = list(self.rows)
        n = len(rows)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                if rows[j + 1]:
                    rows[j] = rows[j].axpy(b, rows[j + 1])
        return BiPoly(self.field, rows)

    def shift_x(self, a: int) -> BiPoly:
        """Return ``f(x + a, y)``."""
        return BiPoly(self.field, [r.taylor_shift(a) for r in self.rows])

    def translate(self, a: int, b: int) -> BiPoly:
        """Return ``f(x + a, y + b)``."""
        return self.shift_x(a).shift_y(b)

    def x_order(self) -> int | float:
        """Largest power of x dividing every row."""
        return min(r.low_order() for r in self.rows)

    def divide_x(self, t: int) -> BiPoly:
        F = self.field
        return BiPoly(F, [UniPoly._raw(F, list(r.coeffs[t:])) for r in self.rows])

    def y_monic(self) -> BiPoly:
        """Scale so the leading coefficient of the top y-row is 1."""
        top = self.y_degree
        if top == NEG_INF:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.rows[top].lc  # type: ignore[index]
        return self if lc == 1 else self.scale(self.field.inv(lc))

    def normalized(self, order: WeightedOrder) -> BiPoly:
        """Scale so the leading coefficient under ``order`` is 1."""
        _, lc = order.leading_term(self)
        return self if lc == 1 else self.scale(self.field.inv(lc))


def multiplicity(f: BiPoly, point: tuple[int, int]) -> int:
    """Lowest total degree of a monomial of ``f(x + a, y + b)``."""
    if f.is_zero():
        raise ZeroPolynomial("multiplicity of the zero polynomial is undefined")
    a, b = point
    g = f.translate(int(a), int(b))
    best = math.inf
    for j, row in enumerate(g.rows):
        lo = row.low_order()
        if lo + j < best:
            best = lo + j
    return int(best)


def eval_y(f: BiPoly, h: UniPoly) -> UniPoly:
    return f.eval_y(h)


def mul_uni(f: BiPoly, g: UniPoly) -> BiPoly:
    return f.mul_uni(g)


def mul_linear_y(f: BiPoly, h: UniPoly) -> BiPoly:
    return f.mul_linear_y(h)


def equal_up_to_scalar(f: BiPoly, g: BiPoly) -> bool:
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return f.y_monic() == g.y_monic()
