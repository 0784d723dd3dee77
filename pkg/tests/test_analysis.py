import networkx as nx
import pytest
from conftest import FREE_PRODUCT
from oracles import brute_vertex_connectivity, dart_digraph, gf2_rank

from planar_cayley.analysis import (
    InapplicableError,
    connectivity_estimate,
    cycle_space_check,
    ends_estimate,
    euler_curvature_check,
    face_size_expectation,
    find_dividing_cycle,
    find_hinges,
    macay_precondition_check,
    matches_relator,
    verify_graph,
    verify_relators,
)
from planar_cayley.builder import build_entry, build_presentation
from planar_cayley.catalog import get_entry, instantiate_entry
from planar_cayley.embedding import embed
from planar_cayley.enumeration import build_finite
from planar_cayley.graph import ColorLabel, from_darts
from planar_cayley.patterns import regular_pattern
from planar_cayley.presentation import parse_presentation
from planar_cayley.tilings import hex_strip, truncated_tiling
from planar_cayley.words import letters_string

BCD = dict.fromkeys("bcd", "preserve")


def regular_graph(m: int, n: int, radius: int):
    p = parse_presentation(f"<b,c,d | b^2, c^2, d^2, {regular_pattern(m, n)}>")
    return build_presentation(p, radius).graph, p


@pytest.fixture(scope="module")
def free_ball():
    p = parse_presentation(FREE_PRODUCT)
    return build_presentation(p, 5).graph, p


class TestRelators:
    def test_prism(self, prism, prism_pres):
        assert verify_relators(prism, prism_pres).passed

    def test_wrong_relator(self, prism):
        r = verify_relators(prism, parse_presentation("<a,b | b^2, a^4>"))
        assert not r.passed and r.relator == "a^4"

    def test_aia2i(self):
        g = build_entry("AIa2i", {"n": 3, "m": 2}, 6).graph
        assert verify_relators(g, parse_presentation("<a,b | b^2, (a^2b)^2; a^6>")).passed


class TestConnectivity:
    def test_free_product_cutvertex(self, free_ball):
        g, p = free_ball
        c = connectivity_estimate(g, relators=p.all_relators)
        assert c.kappa == 1 and c.exact and c.witness == (g.root,)

    @pytest.mark.parametrize("text", ["<a,b | b^2, a^3, (ab)^2>", "<a,b | b^2, a^3, (ab)^3>", "<a,b | b^2, a^4, (ab)^3>",
                                      "<b,c,d | b^2, c^2, d^2, (bc)^2, (cd)^2, (db)^2>", "<a,b | b^2, a^4, (ab)^2>"])
    def test_finite_matches_brute_force(self, text):
        g = build_finite(parse_presentation(text))
        c = connectivity_estimate(g)
        assert c.exact and c.kappa == brute_vertex_connectivity(nx.Graph(dart_digraph(g)))

    def test_prism_is_three_connected(self, prism):
        c = connectivity_estimate(prism)
        assert c.label() == "3" and c.witness is None

    def test_aiiciii(self):
        e = "AIIciii"
        p = instantiate_entry(e, {"P": "(dcbcdcbcbc)^2"})
        g = build_entry(e, {"P": "(dcbcdcbcbc)^2"}, 6).graph
        assert connectivity_estimate(g, relators=p.all_relators).label() == ">=3"

    def test_ball_too_small(self):
        with pytest.raises(ValueError):
            connectivity_estimate(truncated_tiling(6, 3, 2))


class TestHinges:
    def test_regular_m1(self):
        g, p = regular_graph(1, 2, 6)
        hinges = find_hinges(g, relators=p.all_relators)
        assert hinges and {h.color for h in hinges} == {"c"}

    def test_regular_m2(self):
        g, p = regular_graph(2, 2, 6)
        assert find_hinges(g, relators=p.all_relators) == []

    def test_cube(self, cube):
        assert find_hinges(cube) == []

    def test_hinges_among_separators(self):
        g, p = regular_graph(1, 2, 6)
        seps = set(connectivity_estimate(g, relators=p.all_relators).separators)
        for h in find_hinges(g, relators=p.all_relators):
            if g.root in (h.u, h.v):
                assert tuple(sorted((h.u, h.v), key=lambda x: x != g.root)) in seps


class TestDividing:
    def test_aia2i_hexagon(self):
        g = build_entry("AIa2i", {"n": 3, "m": 2}, 5).graph
        c = find_dividing_cycle(g, 6, instantiate_entry("AIa2i", {"n": 3, "m": 2}).all_relators)
        assert c is not None and letters_string(c.word) == "aaaaaa"

    def test_cube(self, cube):
        assert find_dividing_cycle(cube, 8) is None

    def test_aiicii_word(self):
        params = {"k": 3, "P": "bcdcbcdc"}
        p = instantiate_entry("AIIcii", params)
        g = build_entry("AIIcii", params, 6).graph
        c = find_dividing_cycle(g, 8, p.all_relators)
        assert matches_relator(c.word, p.dividing, g.involutions) is not None


class TestEnds:
    def test_prism(self, prism):
        assert ends_estimate(prism, 1).lower_bound == 0

    def test_hex_strip(self):
        g = hex_strip(4, coloring="three", radius=6)
        relators = instantiate_entry("AIIci", {"n": 2}).all_relators
        assert ends_estimate(g, 4, relators=relators).lower_bound == 2

    def test_free_product(self, free_ball):
        g, p = free_ball
        assert ends_estimate(g, 1, relators=p.all_relators).lower_bound >= 3

    def test_margin_too_large(self, free_ball):
        with pytest.raises(ValueError):
            ends_estimate(free_ball[0], 5)


class TestEuler:
    def test_cube(self, cube):
        assert euler_curvature_check(embed(cube, dict.fromkeys("bcd", "reverse"))[2]).passed

    def test_prism(self, prism):
        r = euler_curvature_check(embed(prism, {"a": "preserve", "b": "preserve"})[2])
        assert r.passed and r.total == 12

    def test_fabricated(self):
        r = euler_curvature_check({4: 5})
        assert not r.passed and r.total == 10

    def test_open_faces(self):
        with pytest.raises(InapplicableError):
            euler_curvature_check(embed(truncated_tiling(6, 3, 3), {"a": "preserve", "b": "preserve"})[2])


def relator_circuit_rank(g, p):
    index = {}
    for u, v, s in g.edges():
        index[frozenset((u, v, s))] = len(index)
    rows = []
    for r in p.all_relators:
        for v in range(len(g)):
            row = [0] * len(index)
            u = v
            for letter in r:
                w = g.nbr[u][g.index((letter[0], 1 if letter[0] in g.involutions else letter[1]))]
                row[index[frozenset((u, w, letter[0]))]] ^= 1
                u = w
            rows.append(row)
    return gf2_rank(rows)


class TestCycleSpace:
    def test_prism_full(self, prism, prism_pres):
        r = cycle_space_check(prism, prism_pres)
        assert r.passed and r.rank == 4 == relator_circuit_rank(prism, prism_pres)

    def test_prism_triangles_only(self, prism):
        p = parse_presentation("<a,b | b^2, a^3>")
        r = cycle_space_check(prism, p)
        assert not r.passed and r.rank == 2 == relator_circuit_rank(prism, p)

    def test_tree(self):
        g = from_darts([ColorLabel("b", True)], 2, [(0, 1, "b", 0)])
        r = cycle_space_check(g, parse_presentation("<b | b^2>"))
        assert r.passed and r.expected == 0

    def test_ball_inapplicable(self):
        with pytest.raises(InapplicableError):
            cycle_space_check(truncated_tiling(6, 3, 3), parse_presentation("<a,b | b^2, a^6, (ab)^3>"))


class TestMacay:
    def test_azi(self):
        p = instantiate_entry("Azi", {"n": 2})
        g = build_presentation(p, 6).graph
        assert macay_precondition_check(p, g).passed

    def test_non_simple(self, prism):
        p = parse_presentation("<a,b | b^2, a^3, (ab)^2, (ab)^4>")
        r = macay_precondition_check(p, prism)
        assert not r.passed and "not simple" in r.reason

    def test_cube(self, cube):
        p = instantiate_entry("Aziv", {"n": 2, "m": 2, "p": 2})
        r = macay_precondition_check(p, cube)
        assert r.passed and r.max_count == 2


class TestFaceSizes:
    def test_aiicii(self):
        params = {"k": 3, "P": "bcdcbcdc"}
        census = embed(build_entry("AIIcii", params, 6).graph, BCD)[2]
        assert face_size_expectation("AIIcii", census, params).passed and set(census.histogram) == {9}

    def test_aiici(self):
        census = embed(build_entry("AIIci", {"n": 2}, 6).graph, BCD)[2]
        assert face_size_expectation("AIIci", census, {"n": 2}).passed and set(census.histogram) == {6}

    def test_aiiciii(self):
        params = {"P": "(dcbcdcbcbc)^2"}
        census = embed(build_entry("AIIciii", params, 6).graph, BCD)[2]
        assert face_size_expectation("AIIciii", census, params).passed and census.histogram == {}

    def test_wrong_sizes_fail(self):
        params = {"k": 3, "P": "bcdcbcdc"}
        census = embed(build_entry("AIIci", {"n": 2}, 6).graph, BCD)[2]
        assert not face_size_expectation("AIIcii", census, params).passed


class TestMonotone:
    @pytest.mark.parametrize("name", ["Aici", "Ai", "AIa2i", "AIId2iii"])
    def test_kappa_non_decreasing(self, name):
        e = get_entry(name)
        params = e.param_set("minimal")
        p = instantiate_entry(e, params)
        labels = []
        for R in (4, 5, 6):
            c = connectivity_estimate(build_entry(e, params, R).graph, relators=p.all_relators)
            labels.append(c.kappa)
        assert labels == sorted(labels)

    @pytest.mark.parametrize("name", ["Aici", "AIa2i", "Abi", "AIIcii"])
    def test_ends_non_decreasing(self, name):
        e = get_entry(name)
        params = e.param_set("branching")
        p = instantiate_entry(e, params)
        bounds = [ends_estimate(build_entry(e, params, R).graph, 2, relators=p.all_relators).lower_bound for R in (4, 5, 6, 7)]
        assert bounds == sorted(bounds)


def test_report_on_finite_row(prism, prism_pres):
    rep = verify_graph(prism, prism_pres, "Aoi", {"n": 3, "m": 2})
    assert rep.passed
    assert rep.cycle_space_ok["rank"] == 4 and rep.euler_ok["curvature_total"] == 12
