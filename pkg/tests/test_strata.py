"""Stratification: enumeration, dimensions, codimensions, fiber bounds."""

import pytest

from charvar.groups import char_variety_dim, parse_group_spec
from charvar.strata import (
    StratumInfo,
    WeightedPartition,
    enumerate_weighted_partitions,
    factor_strata_table,
    fiber_dim_bound,
    genus1_stratum_dim_gl,
    iter_product_strata,
    singular_codim_factor,
    strata_table,
    stratum_codim,
    stratum_dim_gl,
    stratum_dim_sl,
)

P = WeightedPartition.of


def count_by_generating_function(nmax):
    """Independent count of weighted partitions: prod_m (1-x^m)^{-d(m)}.

    A part (l, v) has weight lv = m, and there are d(m) = #divisors(m)
    part species of weight m; partitions are multisets of species.
    """
    coeffs = [1] + [0] * nmax
    for m in range(1, nmax + 1):
        species = sum(1 for t in range(1, m + 1) if m % t == 0)
        for _ in range(species):
            for i in range(m, nmax + 1):
                coeffs[i] += coeffs[i - m]
    return coeffs


def test_enumeration_counts_against_oracle():
    oracle = count_by_generating_function(10)
    for n in range(1, 11):
        parts = enumerate_weighted_partitions(n)
        assert len(parts) == oracle[n]
        assert len(set(parts)) == len(parts)
        for nu in parts:
            assert nu.total == n


def test_enumeration_small_cases():
    assert [str(p) for p in enumerate_weighted_partitions(1)] == ["(1,1)"]
    assert [str(p) for p in enumerate_weighted_partitions(2)] == [
        "(1,2)",
        "(2,1)",
        "(1,1; 1,1)",
    ]
    assert len(enumerate_weighted_partitions(3)) == 5


def test_canonical_part_order():
    nu = P((1, 1), (2, 1), (1, 3))
    assert nu.parts == ((1, 3), (2, 1), (1, 1))
    # same multiset in any input order gives equal objects
    assert P((2, 1), (1, 3), (1, 1)) == nu
    with pytest.raises(ValueError):
        P((0, 1))


def test_stratum_dims():
    assert stratum_dim_gl(P((1, 2), (1, 1)), 2) == 14
    assert stratum_dim_gl(P((1, 1), (1, 1)), 2) == 8
    assert stratum_dim_gl(P((2, 1)), 1) == 2
    for n in range(1, 7):
        for g in range(2, 5):
            assert stratum_dim_gl(P((1, n)), g) == 2 * (1 + n * n * (g - 1))
    # SL dimension differs by 2g (torus fibration)
    for nu in enumerate_weighted_partitions(5):
        for g in (1, 2, 3):
            assert stratum_dim_gl(nu, g) - stratum_dim_sl(nu, g) == 2 * g


def test_stratum_codim_values():
    assert stratum_codim(P((1, 1), (1, 1)), 2) == 2
    assert stratum_codim(P((1, 2), (1, 1)), 2) == 6
    assert stratum_codim(P((2, 1)), 2) == 6
    for n in range(1, 8):
        for g in range(2, 5):
            assert stratum_codim(P((1, n)), g) == 0
    with pytest.raises(ValueError):
        stratum_codim(P((1, 2)), 2, n=3)


def test_codim_identity_formula_vs_subtraction():
    # the double-sum expansion equals ambient dimension minus stratum dimension
    for n in range(1, 9):
        gl = parse_group_spec(f"GL({n})") if n >= 2 else parse_group_spec("GL(1)")
        for g in range(2, 5):
            ambient = char_variety_dim(gl, g)
            for nu in enumerate_weighted_partitions(n):
                assert stratum_codim(nu, g) == ambient - stratum_dim_gl(nu, g)


def test_exceptional_codim_lists():
    # scan: the only non-generic stratum of codim < 4 is (1,1;1,1) at (2,2);
    # excluding (n,g)=(2,2), codim < 8 happens exactly twice
    below4 = []
    below8 = []
    for n in range(2, 7):
        for g in range(2, 5):
            for nu in enumerate_weighted_partitions(n):
                if nu.is_generic:
                    continue
                c = stratum_codim(nu, g)
                if c < 4:
                    below4.append((n, g, str(nu)))
                if c < 8 and (n, g) != (2, 2):
                    below8.append((n, g, str(nu)))
    assert below4 == [(2, 2, "(1,1; 1,1)")]
    assert sorted(below8) == [(2, 3, "(1,1; 1,1)"), (3, 2, "(1,2; 1,1)")]


def test_codims_even_and_positive():
    for n in range(2, 7):
        for g in range(2, 5):
            for nu in enumerate_weighted_partitions(n):
                c = stratum_codim(nu, g)
                assert c % 2 == 0
                if nu.is_generic:
                    assert c == 0
                else:
                    assert c >= 2


def test_genus1_model():
    assert genus1_stratum_dim_gl(P((2, 1))) == 2
    assert genus1_stratum_dim_gl(P((1, 1), (1, 1))) == 4
    assert genus1_stratum_dim_gl(P((1, 2))) is None
    # populated genus-one strata carry the degenerate formula value 2k
    for n in range(1, 8):
        for nu in enumerate_weighted_partitions(n):
            model = genus1_stratum_dim_gl(nu)
            if nu.all_dims_one:
                assert model == stratum_dim_gl(nu, 1) == 2 * nu.k
            else:
                assert model is None


def test_singular_codim_factor():
    assert singular_codim_factor(1, 2) is None
    assert singular_codim_factor(2, 2) == 2
    assert singular_codim_factor(3, 2) == 6
    assert singular_codim_factor(2, 3) == 6
    assert singular_codim_factor(4, 2) == 10
    # genus one: merging two points always costs exactly 2
    for n in range(2, 9):
        assert singular_codim_factor(n, 1) == 2


def test_fiber_dim_bounds():
    # over the open stratum the fiber is a single closed orbit of PGL(n)
    for n in range(1, 7):
        for g in (2, 3):
            fiber, preimage = fiber_dim_bound(P((1, n)), g)
            assert fiber == n * n - 1
            assert preimage == n * n * g + n * n * (g - 1) + 1
    assert fiber_dim_bound(P((2, 1)), 2) == (6, 10)
    assert fiber_dim_bound(P((1, 1), (1, 1)), 3) == (6, 18)
    with pytest.raises(ValueError):
        fiber_dim_bound(P((1, 2)), 1)
    # preimage bound = fiber bound + stratum dimension, for every type
    for n in range(1, 9):
        for g in (2, 3):
            for nu in enumerate_weighted_partitions(n):
                fiber, preimage = fiber_dim_bound(nu, g)
                assert preimage == fiber + stratum_dim_gl(nu, g)


def test_factor_strata_table():
    rows = factor_strata_table(2, 2)
    assert len(rows) == 3
    open_rows = [r for r in rows if r.is_open]
    assert len(open_rows) == 1
    assert str(open_rows[0].nu) == "(1,2)"
    assert open_rows[0].codim == 0
    assert {r.codim for r in rows} == {0, 6, 2}

    # genus one keeps only populated types: partitions of n into multiplicities
    rows1 = factor_strata_table(3, 1)
    assert [str(r.nu) for r in rows1] == ["(3,1)", "(2,1; 1,1)", "(1,1; 1,1; 1,1)"]
    assert [r.dim_gl for r in rows1] == [2, 4, 6]
    assert [r.codim for r in rows1] == [4, 2, 0]
    assert [r.fiber_bounds for r in rows1] == [None, None, None]


def test_strata_table_specs():
    table = strata_table(parse_group_spec("SL(2)"), 2)
    assert table.torus_dim == 0
    assert len(table.factor_tables) == 1
    assert table.to_json()["total_dim"] == 6

    # SL(1): a single smooth point, no factor tables
    point = strata_table(parse_group_spec("SL(1)"), 2)
    assert point.factor_tables == ()
    assert point.to_json()["total_dim"] == 0

    # GL and SL factors share codimensions
    gl = strata_table(parse_group_spec("GL(2)"), 2)
    sl = strata_table(parse_group_spec("SL(2)"), 2)
    assert [r.codim for r in gl.factor_tables[0][1]] == [
        r.codim for r in sl.factor_tables[0][1]
    ]


def test_iter_product_strata():
    spec = parse_group_spec("SL(2)xSL(3)")
    combos = list(iter_product_strata(spec, 2))
    assert len(combos) == 3 * 5
    assert all(isinstance(row, StratumInfo) for combo in combos for row in combo)
