"""Dense univariate polynomials over a :class:`~rslist.gf.FieldCtx`.

Coefficients are canonical field integers stored low to high with trailing
zeros stripped, so the zero polynomial has no coefficients. Its degree is
``-inf``, which compares below every integer.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DivisionByZero, DuplicateNodes, LengthMismatch, MixedFields
from .gf import FieldCtx, FieldElement

NEG_INF = -math.inf


def _strip(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Iterable[int | FieldElement] = ()):
        self.field = field
        self.coeffs = _strip([field.check(int(c)) for c in coeffs])

    @classmethod
    def _raw(cls, field: FieldCtx, coeffs: list[int]) -> UniPoly:
        # trusted constructor: skips range checks
        p = object.__new__(cls)
        p.field = field
        p.coeffs = _strip(coeffs)
        return p

    @classmethod
    def zero(cls, field: FieldCtx) -> UniPoly:
        return cls._raw(field, [])

    @classmethod
    def one(cls, field: FieldCtx) -> UniPoly:
        return cls._raw(field, [1])

    @classmethod
    def constant(cls, field: FieldCtx, c: int) -> UniPoly:
        return cls._raw(field, [field.check(int(c))])

    @classmethod
    def monomial(cls, field: FieldCtx, d: int, c: int = 1) -> UniPoly:
        return cls._raw(field, [0] * d + [c])

    @classmethod
    def x_minus(cls, field: FieldCtx, a: int) -> UniPoly:
        return cls._raw(field, [field.neg(a), 1])

    # -- basic properties ------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def low_order(self) -> int | float:
        """Largest power of x dividing the polynomial (``inf`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self.field!r}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    # -- ring operations -------------------------------------------------

    def _same(self, other: UniPoly) -> None:
        if self.field != other.field:
            raise MixedFields(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: UniPoly) -> UniPoly:
        self._same(other)
        return UniPoly._raw(self.field, self.field.add_vec(self.coeffs, other.coeffs))

    def __neg__(self) -> UniPoly:
        return UniPoly._raw(self.field, self.field.neg_vec(self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        self._same(other)
        F = self.field
        return UniPoly._raw(F, F.add_vec(self.coeffs, F.neg_vec(other.coeffs)))

    def __mul__(self, other: UniPoly | FieldElement | int) -> UniPoly:
        if isinstance(other, UniPoly):
            self._same(other)
            return UniPoly._raw(self.field, self.field.convolve(self.coeffs, other.coeffs))
        return self.scale(int(other))

    __rmul__ = __mul__

    def scale(self, c: int) -> UniPoly:
        return UniPoly._raw(self.field, self.field.scale_vec(int(c), self.coeffs))

    def shift(self, d: int) -> UniPoly:
        """Multiply by ``x^d``."""
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, [0] * d + list(self.coeffs))

    shift_mul_xd = shift

    def axpy(self, c: int, other: UniPoly, d: int = 0) -> UniPoly:
        """Return ``self + c * x^d * other``."""
        self._same(other)
        return UniPoly._raw(self.field, self.field.axpy(c, other.coeffs, self.coeffs, d))

    def pow(self, e: int) -> UniPoly:
        out = UniPoly.one(self.field)
        for _ in range(e):
            out = out * self
        return out

    def divrem(self, g: UniPoly) -> tuple[UniPoly, UniPoly]:
        self._same(g)
        if not g.coeffs:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        dg = len(g.coeffs) - 1
        if len(r) - 1 < dg:
            return UniPoly.zero(F), self
        inv_lead = F.inv(g.coeffs[-1])
        body = g.coeffs[:-1]
        quot = [0] * (len(r) - dg)
        for top in range(len(r) - 1, dg - 1, -1):
            c = r[top]
            if not c:
                continue
            c = F.mul(c, inv_lead)
            quot[top - dg] = c
            r[top] = 0
            shift = top - dg
            r[shift:top] = F.axpy(F.neg(c), body, r[shift:top])
        return UniPoly._raw(F, quot), UniPoly._raw(F, r[:dg])

    def __floordiv__(self, g: UniPoly) -> UniPoly:
        return self.divrem(g)[0]

    def __mod__(self, g: UniPoly) -> UniPoly:
        return self.divrem(g)[1]

    def eval(self, a: int | FieldElement) -> int:
        """Horner evaluation at ``a``."""
        a = int(a)
        F = self.field
        acc = 0
        if F.m == 1:
            p = F.p
            for c in reversed(self.coeffs):
                acc = (acc * a + c) % p
            F.mult_counter += max(len(self.coeffs) - 1, 0)
            return acc
        it = reversed(self.coeffs)
        for c in it:
            acc = c
            break
        for c in it:
            acc = F.add(F.mul(acc, a), c)
        return acc

    __call__ = eval

    def taylor_shift(self, a: int) -> UniPoly:
        """Return ``f(x + a)`` via repeated synthetic division by ``x - a``."""
        F = self.field
        c = list(self.coeffs)
        n = len(c)
        if a == 0 or n < 2:
            return self
        if F.m == 1:
            p = F.p
            for i in range(n - 1):
                for j in range(n - 2, i - 1, -1):
                    c[j] = (c[j] + a * c[j + 1]) % p
            F.mult_counter += n * (n - 1) // 2
        else:
            for i in range(n - 1):
                for j in range(n - 2, i - 1, -1):
                    c[j] = F.add(c[j], F.mul(a, c[j + 1]))
        return UniPoly._raw(F, c)

    def monic(self) -> UniPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))


def node_poly(field: FieldCtx, alphas: Sequence[int]) -> UniPoly:
    """The monic polynomial vanishing exactly on ``alphas``."""
    _check_distinct(alphas)
    out = UniPoly.one(field)
    for a in alphas:
        out = out * UniPoly.x_minus(field, int(a))
    return out


def _check_distinct(alphas: Sequence[int]) -> None:
    vals = [int(a) for a in alphas]
    if len(set(vals)) != len(vals):
        raise DuplicateNodes(f"evaluation points are not distinct: {vals}")


def lagrange_basis(field: FieldCtx, alphas: Sequence[int]) -> list[UniPoly]:
    """Polynomials ``h_i`` of degree ``n-1`` with ``h_i(alpha_j) = [i == j]``."""
    eta = node_poly(field, alphas)
    basis = []
    for a in alphas:
        partial, rem = eta.divrem(UniPoly.x_minus(field, int(a)))
        assert rem.is_zero()
        basis.append(partial.scale(field.inv(partial.eval(a))))
    return basis


def combine(field: FieldCtx, values: Sequence[int], basis: Sequence[UniPoly]) -> UniPoly:
    """``sum(v_i * h_i)`` for a precomputed Lagrange basis."""
    if len(values) != len(basis):
        raise LengthMismatch(f"{len(values)} values for {len(basis)} basis polynomials")
    acc: list[int] = []
    for v, h in zip(values, basis):
        v = int(v)
        if v:
            acc = field.axpy(v, h.coeffs, acc)
    return UniPoly._raw(field, acc)


def interpolate(field: FieldCtx, values: Sequence[int], alphas: Sequence[int]) -> UniPoly:
    """The unique polynomial of degree < n taking ``values`` at ``alphas``."""
    if len(values) != len(alphas):
        raise LengthMismatch(f"{len(values)} values for {len(alphas)} points")
    return combine(field, values, lagrange_basis(field, alphas))
