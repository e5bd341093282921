"""Reed-Solomon codes as evaluation codes."""
from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .errors import DuplicateNodes, KTooSmall, LengthMismatch, MessageDegreeTooHigh
from .gf import FieldCtx
from .poly import UniPoly, combine, lagrange_basis, node_poly


def default_alphas(field: FieldCtx, n: int) -> list[int]:
    """The first ``n`` nonzero elements; zero is appended only when ``n == q``."""
    if n > field.q:
        raise ValueError(f"n={n} exceeds the field order {field.q}")
    pts = list(range(1, min(n, field.q - 1) + 1))
    if n == field.q:
        pts.append(0)
    return pts


class RSCode:
    """RS(n, k): evaluations of all polynomials of degree < k at ``alphas``.

    The node polynomial and Lagrange basis are built lazily, once per code,
    and shared read-only by every decode on this code.
    """

    def __init__(self, field: FieldCtx, n: int, k: int, alphas: Sequence[int] | None = None):
        if k < 2:
            raise KTooSmall(f"k={k}; the (1, k-1) weighting needs k >= 2")
        if not k < n <= field.q:
            raise ValueError(f"need k < n <= q, got n={n}, k={k}, q={field.q}")
        if alphas is None:
            alphas = default_alphas(field, n)
        alphas = [field.check(int(a)) for a in alphas]
        if len(alphas) != n:
            raise LengthMismatch(f"{len(alphas)} evaluation points for n={n}")
        if len(set(alphas)) != n:
            raise DuplicateNodes(f"evaluation points are not distinct: {alphas}")
        self.field = field
        self.n = n
        self.k = k
        self.alphas = tuple(alphas)

    def __repr__(self) -> str:
        return f"RSCode({self.field!r}, n={self.n}, k={self.k})"

    @property
    def tau(self) -> int:
        """Unique decoding radius."""
        return (self.n - self.k) // 2

    @cached_property
    def eta(self) -> UniPoly:
        return node_poly(self.field, self.alphas)

    @cached_property
    def lagrange(self) -> list[UniPoly]:
        return lagrange_basis(self.field, self.alphas)

    def interpolate(self, v: Sequence[int]) -> UniPoly:
        """``h_v``: the polynomial of degree < n with ``h_v(alpha_i) = v_i``."""
        if len(v) != self.n:
            raise LengthMismatch(f"received {len(v)} symbols for n={self.n}")
        return combine(self.field, [self.field.check(int(s)) for s in v], self.lagrange)

    def evaluate(self, f: UniPoly) -> list[int]:
        return [f.eval(a) for a in self.alphas]

    def encode(self, message: UniPoly | Sequence[int]) -> list[int]:
        if not isinstance(message, UniPoly):
            message = UniPoly(self.field, message)
        if message.degree >= self.k:
            raise MessageDegreeTooHigh(f"deg {message.degree} >= k={self.k}")
        return self.evaluate(message)


def hamming_weight(u: Sequence[int]) -> int:
    return sum(1 for s in u if int(s) != 0)


def hamming_distance(u: Sequence[int], w: Sequence[int]) -> int:
    if len(u) != len(w):
        raise LengthMismatch(f"lengths {len(u)} and {len(w)} differ")
    return sum(1 for a, b in zip(u, w) if int(a) != int(b))


def sub_words(field: FieldCtx, u: Sequence[int], w: Sequence[int]) -> list[int]:
    if len(u) != len(w):
        raise LengthMismatch(f"lengths {len(u)} and {len(w)} differ")
    return [field.sub(int(a), int(b)) for a, b in zip(u, w)]
