"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the run summary and, with
``-s``, inline) and fails on any mismatch or on exceeding its time limit.
Caches are cleared first so timings do not benefit from earlier tests.
"""

import random

from facetideal.core import SimplicialComplex, facet_complex, facet_ideal, format_object, parse
from facetideal.duality import (
    alexander_dual,
    complement_complex,
    component,
    cover_complex,
    covering_number,
    dual_ideal,
    is_unmixed,
    nonface_complex,
    nonface_ideal,
)
from facetideal.homalg import (
    QQ,
    betti_table,
    clear_caches,
    has_linear_resolution,
    is_cohen_macaulay,
    is_componentwise_linear,
    is_sequentially_cm,
    pure_skeleton_ideal,
)
from facetideal.linquo import find_linear_quotient_order, shelling_from_quotients
from facetideal.oracles import (
    brute_alexander_dual_faces,
    brute_minimal_covers,
    brute_nonface_facets,
    brute_nonface_faces,
    taylor_betti,
)
from facetideal.trees import is_forest, is_leaf, leaves, localize

from acceptance_log import criterion
from generators import grow_forest, mixed_ideal, random_complex, unmixed_forest


def monos(obj, masks):
    return sorted(obj.ambient.format_monomial(m) for m in masks)


def distinct(make, count):
    seen = {}
    while len(seen) < count:
        obj = make()
        seen.setdefault(format_object(obj), obj)
    return list(seen.values())


def test_criterion_1_duality_diagram():
    clear_caches()
    with criterion(1, "duality diagram for (xyz, zu)", 0.1) as c:
        ideal = parse("(xyz, zu)")
        cx = facet_complex(ideal)
        cover = cover_complex(cx)
        nonfaces = nonface_complex(ideal)
        alex = alexander_dual(nonfaces)
        dual = dual_ideal(ideal)
        c.check("facet complex", format_object(cx) == "<xyz, zu> over x,y,z,u")
        c.check("cover complex", monos(cx, cover.facets) == ["xu", "yu", "z"])
        c.check("nonface complex", monos(ideal, nonfaces.facets) == ["xyu", "xz", "yz"])
        c.check("Alexander dual", monos(ideal, alex.facets) == monos(cx, complement_complex(cx).facets) == ["u", "xy"])
        c.check("dual ideal", format_object(dual) == "(xu, yu, z) over x,y,z,u")
        c.check("dual as facet ideal of cover complex", facet_ideal(cover) == dual)
        c.check("dual as nonface ideal of Alexander dual", nonface_ideal(alex.as_complex()) == dual)


def test_criterion_2_covers():
    clear_caches()
    with criterion(2, "minimal covers of <xyz, yzu, uv>", 0.1) as c:
        cx = parse("<xyz, yzu, uv>")
        c.check("covers", monos(cx, cover_complex(cx).facets) == ["xu", "yu", "yv", "zu", "zv"])
        c.check("covering number", covering_number(cx) == 2)
        c.check("unmixed", is_unmixed(cx))


def test_criterion_3_skeleta():
    clear_caches()
    with criterion(3, "pure skeleta of (xyz, zu)", 1.0) as c:
        ideal = parse("(xyz, zu)")
        expected = [
            "(xy, xz, xu, yz, yu, zu) over x,y,z,u",
            "(xyz, xyu, zu) over x,y,z,u",
            "(z) over x,y,z,u",
        ]
        skeleta = [pure_skeleton_ideal(ideal, i) for i in range(3)]
        c.check("skeleton ideals", [format_object(s) for s in skeleta] == expected)
        c.check("skeleta CM over Q", all(is_cohen_macaulay(s, QQ) for s in skeleta))
        c.check("sequentially CM", is_sequentially_cm(ideal, QQ))


def test_criterion_4_leaves_and_localization():
    clear_caches()
    with criterion(4, "leaves and localizations", 0.1) as c:
        cx = parse("<xyz, yzu, zuv>")
        m = cx.ambient.mask
        c.check("xyz is a leaf", is_leaf(cx, m("xyz"))[0])
        c.check("yzu is not a leaf", not is_leaf(cx, m("yzu"))[0])
        c.check("leaf table", monos(cx, leaves(cx)) == ["xyz", "zuv"])
        ideal = parse("(xyz, yzu, yuv) over x,y,z,u,v")
        m = ideal.ambient.mask
        c.check("localize at (x,z,u)", format_object(localize(ideal, m("xzu"))) == "(xz, u) over x,z,u")
        c.check("localize at (y,z,v)", format_object(localize(ideal, m("yzv"))) == "(yz, yv) over y,z,v")


def test_criterion_5_trees_have_linear_quotients():
    clear_caches()
    with criterion(5, "forest duals have linear quotients", 120.0) as c:
        rng = random.Random(5)
        forests = distinct(lambda: grow_forest(rng, rng.randint(1, 9)), 200)
        c.check("all generated complexes are forests", all(is_forest(cx).is_forest for cx in forests))
        uncertified = non_scm = components = 0
        for cx in forests:
            ideal = facet_ideal(cx)
            dual = dual_ideal(ideal)
            for k in range(cx.n + 1):
                comp = component(dual, k)
                if comp.is_zero():
                    continue
                components += 1
                cert = find_linear_quotient_order(comp)
                if cert is None or not cert.replay(comp):
                    uncertified += 1
            if not is_sequentially_cm(ideal):
                non_scm += 1
        c.check(f"{uncertified} uncertified components", uncertified == 0)
        c.check(f"{non_scm} forests not sequentially CM", non_scm == 0)
        c.note(f"{len(forests)} forests, {components} components certified")


def test_criterion_6_unmixed_trees():
    clear_caches()
    with criterion(6, "unmixed forests are CM and shellable", 60.0) as c:
        rng = random.Random(6)
        forests = distinct(lambda: unmixed_forest(rng, rng.randint(2, 9)), 50)
        not_cm = bad_shelling = 0
        for cx in forests:
            ideal = facet_ideal(cx)
            if not is_cohen_macaulay(ideal, QQ):
                not_cm += 1
                continue
            shelling = shelling_from_quotients(ideal)
            if not shelling.replay() or set(shelling.facets) != set(nonface_complex(ideal).facets):
                bad_shelling += 1
        c.check(f"{not_cm} not CM", not_cm == 0)
        c.check(f"{bad_shelling} shellings failed to replay", bad_shelling == 0)
        c.note(f"{len(forests)} unmixed forests, {sum(len(cx.facets) >= 2 for cx in forests)} with at least two facets")


def test_criterion_7_oracle_equivalences():
    clear_caches()
    count = 300
    with criterion(7, "oracle equivalences (a)-(e)", 300.0) as c:
        rng = random.Random(7)
        complexes = [random_complex(rng, rng.randint(1, 8), max_facets=rng.choice([3, 6, 9])) for _ in range(count)]
        c.check(
            "(a) cover complex is an involution",
            all(cover_complex(cover_complex(cx)) == cx and set(cover_complex(cx).facets) == brute_minimal_covers(cx) for cx in complexes),
        )
        ok_b = True
        for cx in complexes:
            ideal = facet_ideal(cx)
            ok_b &= set(nonface_complex(ideal).facets) == set(complement_complex(cover_complex(cx)).facets)
            ok_b &= set(nonface_complex(ideal).facets) == brute_nonface_facets(ideal)
            ok_b &= brute_nonface_faces(facet_ideal(cover_complex(cx))) == brute_alexander_dual_faces(ideal)
        c.check("(b) duality relations", ok_b)

        ideals = [mixed_ideal(rng, 7) for _ in range(count)]
        er_bad = duval_bad = cm = scm = 0
        for ideal in ideals:
            dual = dual_ideal(ideal)
            is_cm = is_cohen_macaulay(ideal)
            is_scm = is_sequentially_cm(ideal)
            cm += is_cm
            scm += is_scm
            er_bad += is_cm != has_linear_resolution(dual)
            duval_bad += is_scm != is_componentwise_linear(dual)
        c.check(f"(c) Eagon-Reiner, {er_bad} mismatches", er_bad == 0)
        c.check(f"(d) Duval vs componentwise linear dual, {duval_bad} mismatches", duval_bad == 0)
        c.check("both verdicts occur", 0 < cm < count and 0 < scm < count)

        betti_bad = checked = 0
        while checked < count:
            ideal = mixed_ideal(rng, 8)
            if len(ideal.generators) > 8:
                continue
            checked += 1
            betti_bad += betti_table(ideal).entries != taylor_betti(ideal)
        c.check(f"(e) Betti tables vs Taylor complex, {betti_bad} mismatches", betti_bad == 0)
        c.note(f"{count} instances per check; CM {cm}/{count}, SCM {scm}/{count}")


def test_criterion_8_negative_controls():
    clear_caches()
    with criterion(8, "negative controls", 10.0) as c:
        triangle = parse("<xy, yz, xz>")
        verdict = is_forest(triangle)
        c.check("3-cycle is not a forest", not verdict.is_forest)
        c.check("leafless witness", leaves(SimplicialComplex(triangle.ambient, verdict.witness)) == ())
        two_edges = parse("(xy, zu)")
        c.check("(xy, zu) has no quotient order", find_linear_quotient_order(two_edges) is None)
        c.check("beta_{2,4}(xy, zu) = 1", betti_table(two_edges)[2, 4] == 1 == taylor_betti(two_edges)[(2, 4)])
        square = parse("(xz, xu, yz, yu)")
        c.check("(xz, xu, yz, yu) not CM", not is_cohen_macaulay(square))
        c.check("(xz, xu, yz, yu) not SCM", not is_sequentially_cm(square))
