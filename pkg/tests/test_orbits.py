"""Nilpotent orbit combinatorics: enumeration, diagrams, gradings, tables."""

import itertools

import pytest

from wdsmooth import tables
from wdsmooth.orbits import (
    OrbitLabel,
    UnsupportedTypeError,
    WeightedDynkinDiagram,
    check_distinguished_criterion,
    classical_orbits,
    distinguished_table,
    exposed_root_sweep,
    exposed_roots,
    f4_levi_table,
    grading_dims,
    is_distinguished,
    is_very_even,
    is_zero_orbit,
    smooth_bound_r,
    validate_orbit,
    weighted_dynkin,
)
from wdsmooth.rootsys import DynkinType, build_root_system, levi_factors, parse_group


def rs_of(name):
    return build_root_system(parse_group(name))


def partitions_of(n):
    # independent generator, descending parts
    if n == 0:
        yield ()
        return
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def oracle_orbits(family, rank):
    if family == "A":
        size, keep = rank + 1, lambda p: True
    elif family == "B":
        size = 2 * rank + 1
        keep = lambda p: all(p.count(k) % 2 == 0 for k in set(p) if k % 2 == 0)
    elif family == "C":
        size = 2 * rank
        keep = lambda p: all(p.count(k) % 2 == 0 for k in set(p) if k % 2 == 1)
    elif family == "D":
        size = 2 * rank
        keep = lambda p: all(p.count(k) % 2 == 0 for k in set(p) if k % 2 == 0)
    else:
        raise ValueError(family)
    return [p for p in partitions_of(size) if keep(p)]


@pytest.mark.parametrize(
    "name,family,rank",
    [("GL2", "A", 1), ("GL4", "A", 3), ("SO5", "B", 2), ("SO7", "B", 3),
     ("Sp4", "C", 2), ("Sp6", "C", 3), ("SO8", "D", 4)],
)
def test_orbit_enumeration_matches_partition_oracle(name, family, rank):
    got = [o.parts for o in classical_orbits(rs_of(name))]
    assert got == oracle_orbits(family, rank)


def test_sp6_orbit_list_frozen():
    got = [str(o) for o in classical_orbits(rs_of("Sp6"))]
    assert got == ["6", "4,2", "4,1,1", "3,3", "2,2,2", "2,2,1,1",
                   "2,1,1,1,1", "1,1,1,1,1,1"]
    dist = [str(o) for o in classical_orbits(rs_of("Sp6"))
            if is_distinguished(rs_of("Sp6"), o)]
    assert dist == ["6", "4,2"]


def test_distinguished_rules():
    gl4 = rs_of("GL4")
    assert is_distinguished(gl4, OrbitLabel.partition((4,)))
    assert not is_distinguished(gl4, OrbitLabel.partition((3, 1)))
    so7 = rs_of("SO7")
    assert [str(o) for o in classical_orbits(so7) if is_distinguished(so7, o)] == ["7"]
    assert not is_distinguished(so7, OrbitLabel.partition((3, 3, 1)))


def test_zero_and_very_even_flags():
    gl3 = rs_of("GL3")
    assert is_zero_orbit(gl3, OrbitLabel.partition((1, 1, 1)))
    assert is_zero_orbit(gl3, OrbitLabel.zero())
    assert not is_zero_orbit(gl3, OrbitLabel.partition((2, 1)))
    d4 = rs_of("SO8")
    assert is_very_even(d4, OrbitLabel.partition((4, 4)))
    assert is_very_even(d4, OrbitLabel.partition((2, 2, 2, 2)))
    assert not is_very_even(d4, OrbitLabel.partition((5, 3)))
    assert not is_very_even(gl3, OrbitLabel.partition((2, 1)))


def test_validate_orbit_errors():
    sp6 = rs_of("Sp6")
    with pytest.raises(ValueError, match="sum"):
        validate_orbit(sp6, OrbitLabel.partition((4, 1)))
    with pytest.raises(ValueError, match="parity"):
        validate_orbit(sp6, OrbitLabel.partition((3, 2, 1)))
    e6 = rs_of("E6")
    validate_orbit(e6, OrbitLabel.named("E6(a1)"))
    with pytest.raises(ValueError, match="unknown orbit name"):
        validate_orbit(e6, OrbitLabel.named("E6(b7)"))
    validate_orbit(e6, OrbitLabel.zero())


def test_orbit_label_constraints():
    with pytest.raises(ValueError):
        OrbitLabel.partition((1, 2))
    with pytest.raises(ValueError):
        OrbitLabel.partition(())
    with pytest.raises(ValueError):
        OrbitLabel(parts=(2, 1), name="x")
    assert str(OrbitLabel.partition((2, 1))) == "2,1"
    assert str(OrbitLabel.zero()) == "0"


def test_weighted_dynkin_frozen_rows():
    assert weighted_dynkin(rs_of("GL3"), OrbitLabel.partition((2, 1))).labels == (1, 1)
    assert weighted_dynkin(rs_of("GL4"), OrbitLabel.partition((2, 2))).labels == (0, 2, 0)
    assert weighted_dynkin(rs_of("Sp6"), OrbitLabel.partition((4, 2))).labels == (2, 0, 2)
    assert weighted_dynkin(rs_of("SO7"), OrbitLabel.partition((3, 3, 1))).labels == (0, 2, 0)
    assert weighted_dynkin(rs_of("GL3"), OrbitLabel.zero()).labels == (0, 0)
    assert weighted_dynkin(rs_of("E6"), OrbitLabel.named("E6(a1)")).labels == (2, 2, 2, 0, 2, 2)


def test_stored_d_rows_match_recipe():
    for rank, rows in tables.D_TABLE.items():
        rs = build_root_system(DynkinType("D", rank))
        for parts, labels in rows:
            assert weighted_dynkin(rs, OrbitLabel.partition(parts)).labels == labels
        # the stored rows are exactly the distinguished orbits
        dist = [o.parts for o in classical_orbits(rs) if is_distinguished(rs, o)]
        assert sorted(dist) == sorted(parts for parts, _ in rows)


def test_distinguished_counts():
    counts = {4: 2, 5: 2, 6: 3, 7: 3}
    for rank, want in counts.items():
        assert len(tables.D_TABLE[rank]) == want
    assert len(tables.E6_TABLE) == 3
    assert len(tables.E7_TABLE) == 6


@pytest.mark.parametrize("tname,nrows", [("E6", 3), ("E7", 6)])
def test_exceptional_tables_invariants(tname, nrows):
    t = parse_group(tname)
    rows = distinguished_table(t)
    assert len(rows) == nrows
    rs = build_root_system(t)
    for orbit, diag in rows:
        assert set(diag.labels) <= {0, 2}
        gd = grading_dims(rs, diag)
        assert gd.dim(1) == 0 and gd.dim(-1) == 0
        assert gd.dim(0) == gd.dim(2)  # distinguished criterion, center is 0
        assert gd.total() == rs.dim_g


def test_distinguished_table_unsupported():
    with pytest.raises(UnsupportedTypeError):
        distinguished_table(DynkinType("F", 4))
    with pytest.raises(UnsupportedTypeError):
        distinguished_table(DynkinType("E", 8))


def test_f4_levi_table_rows():
    rows = f4_levi_table()
    assert [(label, t.name) for label, t, _ in rows] == [
        ("C2", "C2"), ("C3", "C3"), ("C3(a1)", "C3"), ("B3", "B3")]
    for _, t, diag in rows:
        assert set(diag.labels) <= {0, 2}
        rs = build_root_system(t)
        gd = grading_dims(rs, diag)
        assert gd.dim(1) == 0 and gd.dim(-1) == 0
        levi = levi_factors(rs, set(range(t.rank)))
        assert check_distinguished_criterion(levi, dict(enumerate(diag.labels)))


def test_grading_dims_frozen():
    gd = grading_dims(rs_of("GL3"), WeightedDynkinDiagram((1, 1)))
    assert gd.as_dict() == {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}
    assert gd.total() == 9
    regular = grading_dims(rs_of("GL3"), WeightedDynkinDiagram((2, 2)))
    assert regular.as_dict() == {-4: 1, -2: 2, 0: 3, 2: 2, 4: 1}


def test_grading_total_is_dim_g():
    for name in ("GL4", "Sp6", "SO7", "GSp4"):
        rs = rs_of(name)
        for o in classical_orbits(rs):
            assert grading_dims(rs, weighted_dynkin(rs, o)).total() == rs.dim_g


def test_smooth_bound_r():
    gl3 = rs_of("GL3")
    assert smooth_bound_r(grading_dims(gl3, weighted_dynkin(gl3, OrbitLabel.partition((2, 1))))) == 2
    assert smooth_bound_r(grading_dims(gl3, weighted_dynkin(gl3, OrbitLabel.partition((3,))))) == 3
    sp6 = rs_of("Sp6")
    assert smooth_bound_r(grading_dims(sp6, weighted_dynkin(sp6, OrbitLabel.partition((4, 2))))) == 4
    assert smooth_bound_r(grading_dims(gl3, weighted_dynkin(gl3, OrbitLabel.zero()))) == 1


def test_criterion_examples():
    gl3 = rs_of("GL3")
    full = levi_factors(gl3, {0, 1})
    w_sub = weighted_dynkin(gl3, OrbitLabel.partition((2, 1)))
    assert not check_distinguished_criterion(full, dict(enumerate(w_sub.labels)))
    w_reg = weighted_dynkin(gl3, OrbitLabel.partition((3,)))
    assert check_distinguished_criterion(full, dict(enumerate(w_reg.labels)))
    with pytest.raises(ValueError, match="cover exactly"):
        check_distinguished_criterion(full, {0: 2})


@pytest.mark.parametrize(
    "family,ranks",
    [("A", range(1, 6)), ("B", range(2, 6)), ("C", range(2, 6)), ("D", range(4, 6))],
)
def test_criterion_matches_partition_rule(family, ranks):
    # dimension test against the parity characterization, every orbit
    for rank in ranks:
        rs = build_root_system(DynkinType(family, rank))
        full = levi_factors(rs, set(range(rank)))
        for o in classical_orbits(rs):
            w = weighted_dynkin(rs, o)
            got = check_distinguished_criterion(full, dict(enumerate(w.labels)))
            assert got == is_distinguished(rs, o), (family, rank, str(o))


def test_exposed_roots():
    b3 = rs_of("SO7")
    levi = levi_factors(b3, {1, 2})
    assert exposed_roots(levi) == frozenset({1})
    assert exposed_roots(levi_factors(b3, {0, 1, 2})) == frozenset()


def test_exposed_root_sweep_small():
    ambients = [build_root_system(DynkinType(f, r))
                for f, rng in (("A", range(1, 5)), ("B", range(2, 4)),
                               ("C", range(2, 4)), ("D", range(4, 5)))
                for r in rng]
    assert exposed_root_sweep(ambients) == []


def test_weighted_diagram_label_domain():
    with pytest.raises(ValueError):
        WeightedDynkinDiagram((3, 0))
