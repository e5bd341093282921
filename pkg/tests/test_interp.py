import itertools
import types

import pytest

from rslist import FieldCtx, RSCode, UniPoly
from rslist.errors import KTooSmall, LOverrideBelowM
from rslist.interp import (
    build_generators,
    choose_params,
    constraint_count,
    interpolate_Q,
    max_y_degree,
)
from rslist.oracle import constraint_matrix, oracle_min_poly
from rslist.wpoly import BiPoly, WeightedOrder, equal_up_to_scalar, multiplicity

from conftest import REF_Q_ROWS, REF_V


def test_choose_params_examples(ref_code):
    p = choose_params(ref_code, 2)
    assert (p.N, p.l) == (19, 3)
    assert p.y_degree_bound == pytest.approx(19.25**0.5 - 0.5)
    assert 3 < p.y_degree_bound < 4
    p1 = choose_params(ref_code, 1)
    assert (p1.N, p1.l) == (7, 2)
    assert p1.y_degree_bound == pytest.approx(2.1926, abs=1e-4)
    assert choose_params(ref_code, 2, l_override=2).l == 2
    with pytest.raises(LOverrideBelowM):
        choose_params(ref_code, 2, l_override=1)
    with pytest.raises(KTooSmall):
        choose_params(types.SimpleNamespace(n=6, k=1), 1)


def test_max_y_degree_matches_float_formula():
    for N in range(2, 400):
        for k in range(2, 12):
            bound = (2 * N / (k - 1) + 0.25) ** 0.5 - 0.5
            l = max_y_degree(N, k)
            assert l < bound <= l + 1 + 1e-9


def test_build_generators_l1(ref_code, gf7):
    v = [1, 2, 3, 4, 5, 0]
    gs = build_generators(ref_code, v, choose_params(ref_code, 1, l_override=1))
    hv = ref_code.interpolate(v)
    assert gs.gens[0] == BiPoly.from_uni(ref_code.eta, 1)
    assert gs.gens[1] == BiPoly(gf7, [-hv, UniPoly.one(gf7)])


def test_generators_are_in_the_module(rng):
    F = FieldCtx(11)
    for _ in range(10):
        code = RSCode(F, 7, 3, rng.sample(range(11), 7))
        v = [rng.randrange(11) for _ in range(7)]
        m = rng.choice([1, 2, 3])
        gs = build_generators(code, v, choose_params(code, m))
        for i, g in enumerate(gs.gens):
            assert g.y_degree == i
            assert all(multiplicity(g, P) >= m for P in zip(code.alphas, v))


def test_ref_Q(ref_code, gf7):
    Q, params = interpolate_Q(ref_code, REF_V, 2)
    assert params.l == 3
    assert Q.y_monic() == BiPoly.from_rows(gf7, REF_Q_ROWS)


def test_error_free_word_gives_line(rng):
    F = FieldCtx(11)
    code = RSCode(F, 8, 3)
    for _ in range(20):
        f = UniPoly(F, [rng.randrange(11) for _ in range(3)])
        v = code.encode(f)
        Q, _ = interpolate_Q(code, v, 1, l_override=1)
        line = BiPoly.from_uni(UniPoly.one(F), 1).mul_linear_y(f)
        assert equal_up_to_scalar(Q, line)
        assert Q == oracle_min_poly(code, v, 1, 1)


def test_q13_random_against_oracle(rng):
    F = FieldCtx(13)
    for _ in range(5):
        code = RSCode(F, 8, 3, rng.sample(range(13), 8))
        v = [rng.randrange(13) for _ in range(8)]
        Q, params = interpolate_Q(code, v, 2)
        assert Q == oracle_min_poly(code, v, 2, params.l)
        assert Q.y_degree < params.y_degree_bound


def _rank(F, rows):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = F.neg(rows[i][col])
                rows[i] = [F.add(a, F.mul(f, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


@pytest.mark.parametrize("q,n,k,m", [(7, 6, 3, 1), (7, 6, 3, 2), (11, 8, 4, 2), (11, 10, 3, 3)])
def test_first_N_monomials_always_admit_a_solution(q, n, k, m, rng):
    F = FieldCtx(q)
    N = constraint_count(n, m)
    order = WeightedOrder(k - 1)
    monos = list(itertools.islice(order.monomials(N), N))
    assert max(j for _, j in monos) <= max_y_degree(N, k)
    points = list(zip(rng.sample(range(q), n), [rng.randrange(q) for _ in range(n)]))
    A = constraint_matrix(F, monos, points, m)
    assert len(A) == N - 1 and len(A[0]) == N
    assert _rank(F, A) < N
