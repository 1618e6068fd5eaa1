import random

import pytest
from hypothesis import given, settings, strategies as st

from facetideal.core import (
    FacetIdealError,
    MonomialIdeal,
    PreconditionError,
    SimplicialComplex,
    facet_complex,
    facet_ideal,
    format_object,
    parse,
)
from facetideal.duality import dual_ideal, is_unmixed, nonface_ideal
from facetideal.homalg import (
    QQ,
    BettiTable,
    EquivalenceViolation,
    FieldSpec,
    betti_table,
    eagon_reiner_check,
    has_linear_resolution,
    is_cohen_macaulay,
    is_cohen_macaulay_complex,
    is_componentwise_linear,
    is_sequentially_cm,
    krull_dimension,
    link,
    pure_skeleton_ideal,
    reduced_euler_characteristic,
    reduced_homology,
    skeleton_report,
)
from facetideal.oracles import brute_reduced_betti, taylor_betti

from generators import grow_forest, letters, mixed_ideal, random_ideal

GF2, GF3 = FieldSpec(2), FieldSpec(3)

# six-vertex real projective plane
RP2 = parse("<abd, abf, ade, acf, ace, bcd, bef, bce, cdf, def>")


@st.composite
def complexes(draw, n_max=7):
    n = draw(st.integers(1, n_max))
    faces = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=7))
    return SimplicialComplex(letters(n), faces)


def test_field_spec():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:7") == FieldSpec(7)
    assert str(FieldSpec(7)) == "GF(7)" and str(QQ) == "Q"
    for bad in ("fp:4", "fp:1", "fp:x", "r"):
        with pytest.raises(FacetIdealError):
            FieldSpec.parse(bad)


def test_homology_of_circle():
    prof = reduced_homology(parse("<xy, yz, xz>"))
    assert prof.as_dict() == {-1: 0, 0: 0, 1: 1}


def test_homology_of_simplex():
    assert all(b == 0 for b in reduced_homology(parse("<xyzu>")).betti)


def test_homology_of_two_edges():
    cx = parse("<xy, zu>")
    assert brute_reduced_betti(cx) == {-1: 0, 0: 1, 1: 0}
    assert reduced_homology(cx).as_dict() == {-1: 0, 0: 1, 1: 0}


def test_homology_of_empty_face_complex():
    cx = SimplicialComplex(letters(2), [0])
    assert reduced_homology(cx)[-1] == 1


def test_homology_depends_on_field():
    assert reduced_homology(RP2, QQ).as_dict() == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology(RP2, GF2).as_dict() == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert reduced_homology(RP2, GF3).as_dict() == brute_reduced_betti(RP2, 3)


@given(complexes(), st.sampled_from([0, 2, 3, 5]))
@settings(max_examples=120)
def test_homology_matches_dense_oracle(cx, p):
    assert reduced_homology(cx, FieldSpec(p)).as_dict() == brute_reduced_betti(cx, p)


@given(complexes(), st.sampled_from([0, 2, 3]))
def test_euler_characteristic(cx, p):
    prof = reduced_homology(cx, FieldSpec(p))
    alt = sum((-1) ** (i % 2) * b for i, b in prof.as_dict().items())
    assert alt == reduced_euler_characteristic(cx)


def test_link():
    cx = parse("<xyz, yzu, uv>")
    assert link(cx, 0) == cx
    simplex = parse("<xyz>")
    assert format_object(link(simplex, simplex.ambient.mask("x"))) == "<yz> over x,y,z"
    m = cx.ambient.mask
    assert link(cx, m("x")).facets == (m("yz"),)  # x is free in xyz
    with pytest.raises(PreconditionError):
        link(cx, m("xu"))


def test_krull_dimension():
    assert krull_dimension(parse("(xyz, zu)")) == 3
    assert krull_dimension(parse("(x)")) == 0
    assert krull_dimension(MonomialIdeal(letters(5), ())) == 5
    with pytest.raises(PreconditionError):
        krull_dimension(parse("(1) over x"))


@pytest.mark.parametrize("seed", range(40))
def test_krull_dimension_routes_agree(seed):
    rng = random.Random(seed)
    krull_dimension(random_ideal(rng, rng.randint(1, 8)))  # raises on disagreement


def test_skeleton_ideals_example():
    ideal = parse("(xyz, zu)")
    expected = ["(xy, xz, xu, yz, yu, zu) over x,y,z,u", "(xyz, xyu, zu) over x,y,z,u", "(z) over x,y,z,u"]
    assert [format_object(pure_skeleton_ideal(ideal, i)) for i in range(3)] == expected
    assert all(is_cohen_macaulay(pure_skeleton_ideal(ideal, i)) for i in range(3))


def test_skeleton_edge_cases():
    ideal = parse("(xy, zu)")  # Δ_N is pure of dimension 1
    assert pure_skeleton_ideal(ideal, 1) == ideal
    assert format_object(pure_skeleton_ideal(ideal, -1)) == "(x, y, z, u) over x,y,z,u"
    with pytest.raises(PreconditionError):
        pure_skeleton_ideal(ideal, 2)
    with pytest.raises(PreconditionError):
        pure_skeleton_ideal(ideal, -2)


def test_cohen_macaulay_examples():
    assert not is_cohen_macaulay(parse("(xz, xu, yz, yu)"))
    assert is_cohen_macaulay(parse("(xyz) over x,y,z,u"))
    assert is_cohen_macaulay(parse("(xyz, zu)")) is False  # mixed-dimensional Δ_N
    with pytest.raises(PreconditionError):
        is_cohen_macaulay(parse("(1) over x"))


def test_cohen_macaulay_depends_on_field():
    ideal = nonface_ideal(RP2)
    assert is_cohen_macaulay(ideal, QQ)
    assert is_cohen_macaulay(ideal, GF3)
    assert not is_cohen_macaulay(ideal, GF2)


def test_sequential_cm_examples():
    ideal = parse("(xyz, zu)")
    assert is_sequentially_cm(ideal)
    report = skeleton_report(ideal)
    assert [r.dimension for r in report] == [-1, 0, 1, 2]
    assert all(r.cohen_macaulay for r in report)
    assert not is_sequentially_cm(parse("(xz, xu, yz, yu)"))


@pytest.mark.parametrize("seed", range(15))
def test_tree_ideals_are_sequentially_cm(seed):
    rng = random.Random(seed)
    assert is_sequentially_cm(facet_ideal(grow_forest(rng, rng.randint(2, 8))))


def test_betti_examples():
    assert betti_table(parse("(xy)")).entries == {(0, 0): 1, (1, 2): 1}
    assert betti_table(parse("(xy, zu)"))[2, 4] == 1
    assert betti_table(parse("(xy, yz)")).entries == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    with pytest.raises(PreconditionError):
        betti_table(parse("(1) over x"))


def test_betti_depends_on_field():
    ideal = nonface_ideal(RP2)
    assert betti_table(ideal, QQ).entries == taylor_betti(ideal, 0)
    two = betti_table(ideal, GF2)
    assert two.entries == taylor_betti(ideal, 2)
    assert two[4, 6] == 1 and betti_table(ideal, QQ)[4, 6] == 0


@pytest.mark.parametrize("seed", range(40))
def test_betti_matches_taylor(seed):
    rng = random.Random(seed)
    ideal = random_ideal(rng, rng.randint(1, 7), max_gens=7)
    for p in (0, 2):
        assert betti_table(ideal, FieldSpec(p)).entries == taylor_betti(ideal, p)


def test_betti_table_rendering():
    table = betti_table(parse("(xy, zu)"))
    assert table.to_json() == {"0,0": 1, "1,2": 2, "2,4": 1}
    assert table.format().splitlines() == ["      0 1 2", "  0:  1 . .", "  1:  . 2 .", "  2:  . . 1"]
    assert BettiTable({}).format() == "(zero module)"


def test_linear_resolution():
    assert not has_linear_resolution(parse("(xy, zu)"))
    assert has_linear_resolution(parse("(xyz) over x,y,z,u"))
    assert has_linear_resolution(parse("(xy, yz)"))
    assert not has_linear_resolution(parse("(x, yz)"))
    assert has_linear_resolution(MonomialIdeal(letters(3), ()))
    assert has_linear_resolution(parse("(1) over x"))


def test_eagon_reiner_examples():
    ideal = parse("(xyz, zu)")
    for i in range(3):
        skel = pure_skeleton_ideal(ideal, i)
        assert has_linear_resolution(dual_ideal(skel))
        assert eagon_reiner_check(skel)
    bad = parse("(xz, xu, yz, yu)")
    assert format_object(dual_ideal(bad)) == "(xy, zu) over x,z,u,y"
    assert eagon_reiner_check(bad) is False
    assert eagon_reiner_check(parse("(xyz)")) is True
    assert format_object(dual_ideal(parse("(xyz)"))) == "(x, y, z) over x,y,z"


def test_eagon_reiner_over_gf2_on_projective_plane():
    ideal = nonface_ideal(RP2)
    assert eagon_reiner_check(ideal, GF2) is False
    assert eagon_reiner_check(ideal, QQ) is True


def test_eagon_reiner_raises_on_disagreement(monkeypatch):
    import facetideal.homalg as homalg

    monkeypatch.setattr(homalg, "has_linear_resolution", lambda ideal, field=QQ: False)
    with pytest.raises(EquivalenceViolation):
        homalg.eagon_reiner_check(parse("(xyz)"))


@pytest.mark.parametrize("seed", range(60))
def test_homological_equivalences(seed):
    rng = random.Random(seed)
    ideal = mixed_ideal(rng)
    eagon_reiner_check(ideal)
    cm = is_cohen_macaulay(ideal)
    scm = is_sequentially_cm(ideal)
    assert scm == is_componentwise_linear(dual_ideal(ideal))
    if cm:
        assert scm
    if is_unmixed(facet_complex(ideal)):
        assert scm == cm


def test_cm_complex_wrapper():
    assert is_cohen_macaulay_complex(parse("<xy, yz>"))
    assert not is_cohen_macaulay_complex(parse("<xy, zu>"))
