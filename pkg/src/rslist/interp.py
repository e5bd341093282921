"""Interpolation step of list decoding.

Builds the explicit generators of the module of polynomials with
multiplicity at least ``m`` at every received point and y-degree at most
``l``, reduces them to a Groebner basis under the (1, k-1) order, and
returns the basis element with the smallest leading term.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import KTooSmall, LOverrideBelowM, LengthMismatch
from .groebner import GeneratorSet, UpdateHook, minimal_element, reduce
from .poly import UniPoly
from .rs import RSCode
from .wpoly import BiPoly, WeightedOrder


@dataclass(frozen=True)
class InterpParams:
    n: int
    k: int
    m: int
    N: int
    l: int

    @property
    def y_degree_bound(self) -> float:
        """Real-valued bound that ``l`` sits strictly below (unless overridden)."""
        return ((2 * self.N / (self.k - 1)) + 0.25) ** 0.5 - 0.5


def constraint_count(n: int, m: int) -> int:
    return n * m * (m + 1) // 2 + 1


def max_y_degree(N: int, k: int) -> int:
    """Largest integer strictly below sqrt(2N/(k-1) + 1/4) - 1/2.

    ``l < sqrt(2N/(k-1) + 1/4) - 1/2`` is equivalent to ``l(l+1)(k-1) < 2N``,
    which keeps the computation in exact integers.
    """
    l = 0
    while (l + 1) * (l + 2) * (k - 1) < 2 * N:
        l += 1
    return l


def choose_params(code: RSCode, m: int, l_override: int | None = None) -> InterpParams:
    if code.k < 2:
        raise KTooSmall(f"k={code.k}; need k >= 2")
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    N = constraint_count(code.n, m)
    if l_override is not None:
        if l_override < m:
            raise LOverrideBelowM(f"l={l_override} < m={m}")
        l = l_override
    else:
        l = max_y_degree(N, code.k)
        assert l >= m, (l, m)
    return InterpParams(code.n, code.k, m, N, l)


def build_generators(code: RSCode, v: Sequence[int], params: InterpParams) -> GeneratorSet:
    if len(v) != code.n:
        raise LengthMismatch(f"received {len(v)} symbols for n={code.n}")
    F = code.field
    m, l = params.m, params.l
    hv = code.interpolate(v)
    eta = code.eta
    eta_pows = [UniPoly.one(F)]
    for _ in range(m):
        eta_pows.append(eta_pows[-1] * eta)
    gens = []
    # (y - h_v)^i accumulated in a BiPoly with room for y^l
    lin = BiPoly.from_uni(UniPoly.one(F), l)
    for i in range(m + 1):
        gens.append(lin.mul_uni(eta_pows[m - i]) if i < m else lin)
        if i < m:
            lin = lin.mul_linear_y(hv)
    top = lin
    for _ in range(m + 1, l + 1):
        top = top.mul_y()
        gens.append(top)
    return GeneratorSet(gens, WeightedOrder(code.k - 1))


def interpolation_basis(
    code: RSCode,
    v: Sequence[int],
    params: InterpParams,
    on_update: UpdateHook | None = None,
) -> tuple[GeneratorSet, GeneratorSet]:
    """Initial generators and the reduced Groebner basis."""
    initial = build_generators(code, v, params)
    return initial, reduce(initial, on_update)


def interpolate_Q(
    code: RSCode, v: Sequence[int], m: int, l_override: int | None = None
) -> tuple[BiPoly, InterpParams]:
    params = choose_params(code, m, l_override)
    _, basis = interpolation_basis(code, v, params)
    return minimal_element(basis), params
