"""Brute-force reference computations for cross-checking the fast paths.

Nothing here uses the polynomial classes: interpolation is solved as a
linear system over monomial coefficients, and nearest-codeword search
enumerates every message.
"""
from __future__ import annotations

import itertools
from math import comb
from typing import Sequence

from .errors import InstanceTooLarge
from .gf import FieldCtx
from .rs import RSCode
from .wpoly import BiPoly

MAX_MONOMIALS = 2000
MAX_MESSAGES = 10**6


def _ascending_monomials(u: int, l: int):
    """Monomials x^i y^j, j <= l, ascending in weight then y-exponent."""
    w = 0
    while True:
        for j in range(min(l, w // u) + 1):
            yield (w - u * j, j)
        w += 1


def hasse_column(
    F: FieldCtx, mono: tuple[int, int], points: Sequence[tuple[int, int]], m: int
) -> list[int]:
    """Coefficients of x^a y^b (a + b < m) in (x + alpha)^i (y + beta)^j, per point."""
    i, j = mono
    col = []
    for alpha, beta in points:
        for a in range(m):
            if a > i:
                xa = 0
            else:
                xa = F._mul(F.from_int(comb(i, a)), _power(F, alpha, i - a))
            for b in range(m - a):
                if b > j or xa == 0:
                    col.append(0)
                    continue
                yb = F._mul(F.from_int(comb(j, b)), _power(F, beta, j - b))
                col.append(F._mul(xa, yb))
    return col


def _power(F: FieldCtx, a: int, e: int) -> int:
    r = 1
    for _ in range(e):
        r = F._mul(r, a)
    return r


def constraint_matrix(
    F: FieldCtx, monomials: Sequence[tuple[int, int]], points: Sequence[tuple[int, int]], m: int
) -> list[list[int]]:
    """Rows are (point, a, b) constraints; columns follow ``monomials``."""
    cols = [hasse_column(F, mono, points, m) for mono in monomials]
    return [list(row) for row in zip(*cols)]


def _first_dependency(F: FieldCtx, columns, limit: int):
    """Feed columns in order; return (index, kernel vector) for the first dependent one."""
    basis = []  # (pivot, column with 1 at pivot, combination of original columns)
    for t, col in enumerate(columns):
        if t >= limit:
            raise InstanceTooLarge(f"no kernel vector among the first {limit} monomials")
        vec = list(col)
        combo = {t: 1}
        for piv, bvec, bcombo in basis:
            f = vec[piv]
            if f:
                negf = F.neg(f)
                vec = [F.add(x, F._mul(negf, y)) for x, y in zip(vec, bvec)]
                for idx, cv in bcombo.items():
                    combo[idx] = F.add(combo.get(idx, 0), F._mul(negf, cv))
        piv = next((r for r, x in enumerate(vec) if x), None)
        if piv is None:
            return t, combo
        inv = F._inv(vec[piv])
        basis.append((piv, [F._mul(inv, x) for x in vec], {i: F._mul(inv, c) for i, c in combo.items()}))
    raise InstanceTooLarge("ran out of monomials")  # pragma: no cover


def solve_min_poly(
    F: FieldCtx,
    points: Sequence[tuple[int, int]],
    k: int,
    m: int,
    l: int,
    limit: int = MAX_MONOMIALS,
) -> BiPoly:
    """Smallest-leading-term polynomial of y-degree <= l with multiplicity >= m at ``points``."""
    u = k - 1
    monos: list[tuple[int, int]] = []

    def columns():
        for mono in _ascending_monomials(u, l):
            monos.append(mono)
            yield hasse_column(F, mono, points, m)

    t, combo = _first_dependency(F, columns(), limit)
    # verify A x = 0 independently of the elimination
    matrix = constraint_matrix(F, monos[: t + 1], points, m)
    for row in matrix:
        acc = 0
        for idx, cv in combo.items():
            acc = F.add(acc, F._mul(row[idx], cv))
        if acc:
            raise AssertionError("oracle kernel vector violates a constraint")
    terms = {monos[idx]: cv for idx, cv in combo.items() if cv}
    # coefficient of the leading monomial monos[t] is 1 by construction
    return BiPoly.from_terms(F, l, terms)


def oracle_min_poly(code: RSCode, v: Sequence[int], m: int, l: int) -> BiPoly:
    points = [(a, int(s)) for a, s in zip(code.alphas, v)]
    return solve_min_poly(code.field, points, code.k, m, l)


def oracle_nearest(code: RSCode, v: Sequence[int]) -> tuple[list[int], int]:
    F = code.field
    if F.q**code.k > MAX_MESSAGES:
        raise InstanceTooLarge(f"{F.q}^{code.k} messages is too many to scan")
    v = [int(s) for s in v]
    best, best_dist = None, code.n + 1
    powers = [[_power(F, a, e) for e in range(code.k)] for a in code.alphas]
    for msg in itertools.product(range(F.q), repeat=code.k):
        word = []
        for pw in powers:
            acc = 0
            for c, p in zip(msg, pw):
                if c:
                    acc = F.add(acc, F._mul(c, p))
            word.append(acc)
        dist = sum(1 for a, b in zip(word, v) if a != b)
        if dist < best_dist:
            best, best_dist = word, dist
            if dist == 0:
                break
    return best, best_dist
