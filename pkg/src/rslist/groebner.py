"""Groebner bases of submodules of F[x, y]_l under a weighted order.

:func:`reduce` takes generators ``g_0..g_l`` with ``y-deg(g_i) == i`` and
rewrites them, two at a time, until the leading term of each ``g_i`` sits
in row ``i``. Leading terms in pairwise distinct rows certify a Groebner
basis, so no S-pairs are ever formed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import MalformedInput, UnexpectedZero
from .wpoly import BiPoly, Monomial, WeightedOrder

# on_update(r, s, d, before, after); before/after are the generator lists
UpdateHook = Callable[[int, int, int, list[BiPoly], list[BiPoly]], None]


@dataclass
class GeneratorSet:
    gens: list[BiPoly]
    order: WeightedOrder

    @property
    def l(self) -> int:
        return len(self.gens) - 1

    def leading_terms(self) -> list[tuple[Monomial, int]]:
        return [self.order.leading_term(g) for g in self.gens]

    def lt_y_degrees(self) -> list[int]:
        return [mono.j for mono, _ in self.leading_terms()]

    def is_groebner(self) -> bool:
        """Distinct leading-term rows imply a Groebner basis."""
        ys = self.lt_y_degrees()
        return len(set(ys)) == len(ys)


def _check_triangular(gens: Sequence[BiPoly]) -> None:
    l = len(gens) - 1
    for i, g in enumerate(gens):
        if g.l != l:
            raise MalformedInput(f"g_{i} has y-degree bound {g.l}, expected {l}")
        if g.y_degree != i:
            raise MalformedInput(f"g_{i} has y-degree {g.y_degree}, expected {i}")


def reduce(gs: GeneratorSet, on_update: UpdateHook | None = None) -> GeneratorSet:
    """Convert a y-triangular generating set into a Groebner basis.

    The input is not modified. ``on_update`` is called after every rewrite
    with snapshots of the generators before and after it; it exists for
    invariant checks and costs nothing when omitted.
    """
    gens = list(gs.gens)
    _check_triangular(gens)
    order = gs.order
    F = gens[0].field
    for r in range(1, len(gens)):
        while True:
            mono, _ = order.leading_term(gens[r])
            s = mono.j
            if s == r:
                break
            a_rs = gens[r].rows[s]
            a_ss = gens[s].rows[s]
            d = a_rs.degree - a_ss.degree
            c = F.mul(a_rs.lc, F.inv(a_ss.lc))
            before = list(gens) if on_update else None
            if d >= 0:
                gens[r] = gens[r].axpy(F.neg(c), gens[s], d)
            else:
                old_s = gens[s]
                gens[s] = gens[r]
                gens[r] = gens[r].shift(-d).axpy(F.neg(c), old_s)
            if gens[r].is_zero():
                raise UnexpectedZero(f"g_{r} vanished while reducing against g_{s}")
            if on_update:
                on_update(r, s, int(d), before, list(gens))
    return GeneratorSet(gens, order)


def minimal_element(gs: GeneratorSet) -> BiPoly:
    """The generator with the smallest leading term, scaled to leading coefficient 1."""
    order = gs.order
    best = min(gs.gens, key=lambda g: order.key(order.leading_term(g)[0]))
    return best.normalized(order)


def module_remainder(f: BiPoly, basis: GeneratorSet) -> BiPoly:
    """Remainder of ``f`` on division by a Groebner basis.

    Zero exactly when ``f`` lies in the module the basis generates.
    """
    order = basis.order
    F = f.field
    by_row: dict[int, tuple[BiPoly, Monomial, int]] = {}
    for g in basis.gens:
        mono, lc = order.leading_term(g)
        by_row[mono.j] = (g, mono, lc)
    f = f.with_l(basis.l)
    rem = BiPoly.zero(F, basis.l)
    while not f.is_zero():
        mono, c = order.leading_term(f)
        hit = by_row.get(mono.j)
        if hit is not None and hit[1].i <= mono.i:
            g, gm, glc = hit
            f = f.axpy(F.neg(F.div(c, glc)), g, mono.i - gm.i)
        else:
            # move the leading term to the remainder
            term = BiPoly.from_terms(F, basis.l, {(mono.i, mono.j): c})
            rem = rem + term
            f = f - term
    return rem
