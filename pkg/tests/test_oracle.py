import pytest

from nilorbits.gradings import decompose, decompose_classical, grading_grid
from nilorbits.involutions import catalog, pair_by_descriptor
from nilorbits.linalg import commutator, is_zero, mat_mul, mat_sub, rank
from nilorbits.orbits import (ClassicalOrbit, Partition, centralizer_dims,
                              half_orbit, is_divisible, valid_partitions)
from nilorbits.oracle import (centralizer_dim, ker_ad_squared, oracle_grid,
                              realize_pair, sp_half_partition,
                              triple_from_partition)
from nilorbits.roots import SimpleType, all_simple_types


def P(text):
    return Partition.parse(text)


def test_rank_basics():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[2, 0, 1], [0, 3, 1], [2, 3, 2]]) == 2
    assert rank([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == 3


def test_standard_sl2_triple():
    t = triple_from_partition("sl", 2, P("(2)"))
    assert t.e == [[0, 1], [0, 0]]
    assert t.h == [[1, 0], [0, -1]]
    assert t.f == [[0, 0], [1, 0]]


def test_triple_relations_everywhere():
    cases = [("sl", 6, "(3,2,1)"), ("so", 9, "(5,3,1)"), ("so", 8, "(3,3,1,1)"),
             ("sp", 8, "(4,2,2)"), ("sp", 6, "(3,3)"), ("so", 10, "(4,4,1,1)")]
    for kind, n, lam in cases:
        t = triple_from_partition(kind, n, P(lam))
        assert t.check_relations(), (kind, n, lam)


def test_h_eigenvalues():
    t = triple_from_partition("so", 7, P("(3,3,1)"))
    assert t.h_diagonal == [2, 0, -2, 2, 0, -2, 0]
    t = triple_from_partition("sp", 4, P("(2,2)"))
    assert sorted(t.h_diagonal) == [-1, -1, 1, 1]


def test_invalid_partition_rejected():
    with pytest.raises(ValueError):
        triple_from_partition("so", 6, P("(4,2)"))


@pytest.mark.parametrize("kind,n,lam,expect", [
    ("so", 7, "(3,3,1)", 7),
    ("sl", 4, "(4)", 3),
    ("sp", 4, "(2,2)", 4),
])
def test_centralizer_examples(kind, n, lam, expect):
    t = triple_from_partition(kind, n, P(lam))
    assert centralizer_dim(t) == expect


def test_centralizer_formula_agreement():
    for kind, sizes in [("sl", range(2, 10)), ("so", range(3, 10)),
                        ("sp", range(2, 10, 2))]:
        for n in sizes:
            for o in valid_partitions(kind, n):
                t = triple_from_partition(kind, n, o.partition)
                assert centralizer_dim(t) == centralizer_dims(o)[0], o


def test_ker_ad_squared():
    t = triple_from_partition("sl", 6, P("(5,1)"))
    assert ker_ad_squared(t) == \
        centralizer_dims(ClassicalOrbit("sl", 6, P("(3,2,1)")))[0]
    zero = triple_from_partition("sl", 3, P("(1,1,1)"))
    assert ker_ad_squared(zero) == 8
    t = triple_from_partition("so", 8, P("(5,3)"))
    assert ker_ad_squared(t) == \
        centralizer_dims(ClassicalOrbit("so", 8, P("(3,2,2,1)")))[0]


def test_half_orbit_kernel_identity():
    for kind, sizes in [("sl", range(2, 10)), ("so", range(3, 10))]:
        for n in sizes:
            for o in valid_partitions(kind, n):
                if not is_divisible(o):
                    continue
                t = triple_from_partition(kind, n, o.partition)
                assert ker_ad_squared(t) == \
                    centralizer_dims(half_orbit(o))[0], o


def test_realized_involutions():
    for ts, g0 in [("A3", "so4"), ("A3", "sp4"), ("A4", "gl2+gl3"),
                   ("B3", "so4+so3"), ("C3", "sp4+sp2"), ("C3", "gl3"),
                   ("D4", "gl4"), ("D4", "so5+so3")]:
        p = pair_by_descriptor(SimpleType.parse(ts), g0)
        rp = realize_pair(p)
        tr = rp.triple
        assert tr.check_relations(), (ts, g0)
        assert is_zero(mat_sub(rp.sigma(tr.e), tr.e)), (ts, g0)
        assert is_zero(mat_sub(rp.sigma(tr.h), tr.h)), (ts, g0)
        assert is_zero(mat_sub(rp.sigma(rp.sigma(tr.f)), tr.f)), (ts, g0)


def test_involution_fixed_space_dims():
    for ts, g0 in [("A3", "so4"), ("A3", "gl2+gl2"), ("B3", "so4+so3"),
                   ("C3", "gl3"), ("D4", "gl4"), ("D5", "so6+so4")]:
        p = pair_by_descriptor(SimpleType.parse(ts), g0)
        assert realize_pair(p).fixed_space_dim() == p.dim_g0, (ts, g0)


def test_oracle_grid_small():
    p = pair_by_descriptor(SimpleType("A", 2), "so3")
    mg = oracle_grid(p)
    assert (mg.d(0, 0), mg.d(0, 2)) == (1, 1)
    assert (mg.d(1, 0), mg.d(1, 2), mg.d(1, 4)) == (1, 1, 1)


def test_oracle_grid_matches_modules():
    for t in all_simple_types(8):
        if t.family not in "ABCD" or str(t) == "A1":
            continue
        for p in catalog(t):
            if p.ambient[1] > 9:
                continue
            assert oracle_grid(p) == grading_grid(decompose(p)), \
                (str(t), p.descriptor)


def test_oracle_grid_with_explicit_partition():
    p = pair_by_descriptor(SimpleType("A", 5), "so6")
    lam = [P("(5,1)")]
    assert oracle_grid(p, lam) == grading_grid(decompose_classical(p, lam))
    assert oracle_grid(p, lam).d(0, 0) == 3
    assert oracle_grid(p, lam).d(1, 4) == 3


def test_sp_half_search():
    assert sp_half_partition(P("(3,3)"), 6).parts == (2, 2, 1, 1)
    assert sp_half_partition(P("(5,5)"), 10).parts == (3, 3, 2, 2)
    assert sp_half_partition(P("(3,3,1,1)"), 8).parts == (2, 2, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        sp_half_partition(P("(4,2)"), 6)


def test_sp_half_matches_kernel():
    for n in (2, 4, 6, 8):
        for o in valid_partitions("sp", n):
            if not is_divisible(o):
                continue
            half = sp_half_partition(o.partition, n)
            t = triple_from_partition("sp", n, o.partition)
            assert ker_ad_squared(t) == \
                centralizer_dims(ClassicalOrbit("sp", n, half))[0]


def test_commutator_helper():
    a = [[0, 1], [0, 0]]
    b = [[0, 0], [1, 0]]
    assert commutator(a, b) == [[1, 0], [0, -1]]
    assert is_zero(mat_sub(mat_mul(a, b), [[1, 0], [0, 0]]))
