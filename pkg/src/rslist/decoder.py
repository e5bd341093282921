"""End-to-end decoders.

``list_decode`` runs interpolation with multiplicity ``m``, finds all
y-roots of the resulting Q of degree < k and reports each with its codeword
and Hamming distance. Any codeword closer to the received word than
``n - w/m`` (``w`` the weighted degree of Q) is guaranteed to be listed.

``unique_decode`` is the m = l = 1 specialization written out on four
univariate polynomials. It corrects up to ``(n - k) // 2`` errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import LengthMismatch, NoCodewordInRange, TooManyErrors
from .interp import InterpParams, interpolate_Q
from .poly import UniPoly, node_poly
from .rootfind import y_roots
from .rs import RSCode, hamming_distance, sub_words
from .wpoly import BiPoly, WeightedOrder


class Candidate(NamedTuple):
    message: UniPoly
    codeword: list[int]
    distance: int


@dataclass
class DecodeResult:
    Q: BiPoly
    w: int
    params: InterpParams
    candidates: list[Candidate] = field(default_factory=list)

    @property
    def guarantee_radius(self) -> int:
        """Largest ``t`` with ``t < n - w/m``; -1 when no weight qualifies."""
        n, m = self.params.n, self.params.m
        return max((n * m - self.w - 1) // m, -1)

    def messages(self) -> list[UniPoly]:
        return [c.message for c in self.candidates]


def list_decode(code: RSCode, v: Sequence[int], m: int, l_override: int | None = None) -> DecodeResult:
    if len(v) != code.n:
        raise LengthMismatch(f"received {len(v)} symbols for n={code.n}")
    Q, params = interpolate_Q(code, v, m, l_override)
    w = WeightedOrder(code.k - 1).wdeg(Q)
    cands = []
    for h in y_roots(Q, code.k):
        c = code.evaluate(h)
        cands.append(Candidate(h, c, hamming_distance(v, c)))
    cands.sort(key=lambda c: (c.distance, len(c.message.coeffs), c.message.coeffs[::-1]))
    return DecodeResult(Q, w, params, cands)


def unique_decode(code: RSCode, v: Sequence[int]) -> UniPoly:
    """Return the message within distance ``tau`` of ``v``.

    Raises NoCodewordInRange when the final division is inexact, yields a
    polynomial of degree >= k, or lands on a codeword farther than ``tau``.
    """
    if len(v) != code.n:
        raise LengthMismatch(f"received {len(v)} symbols for n={code.n}")
    F = code.field
    k = code.k
    A = UniPoly.zero(F)
    B = code.eta
    C = UniPoly.one(F)
    D = -code.interpolate(v)
    while C.degree + k - 1 < D.degree:
        d = D.degree - B.degree
        c = F.mul(D.lc, F.inv(B.lc))
        negc = F.neg(c)
        if d >= 0:
            C = C.axpy(negc, A, d)
            D = D.axpy(negc, B, d)
        else:
            A, B, C, D = C, D, C.shift(-d).axpy(negc, A), D.shift(-d).axpy(negc, B)
    h, rem = (-D).divrem(C)
    if rem or h.degree >= k:
        raise NoCodewordInRange("no codeword within the unique decoding radius")
    if hamming_distance(code.evaluate(h), v) > code.tau:
        raise NoCodewordInRange("nearest candidate lies beyond the unique decoding radius")
    return h


def error_locator_check(code: RSCode, v: Sequence[int], c: Sequence[int]) -> BiPoly:
    """``f_e * (y - h_c)`` for the error ``e = v - c``, with ``f_e`` the error locator."""
    e = sub_words(code.field, v, c)
    positions = [a for a, ei in zip(code.alphas, e) if ei]
    if len(positions) > code.tau:
        raise TooManyErrors(f"{len(positions)} errors exceed tau={code.tau}")
    F = code.field
    f_e = node_poly(F, positions)
    h_c = code.interpolate(c)
    return BiPoly.from_uni(f_e, 1).mul_linear_y(h_c)
