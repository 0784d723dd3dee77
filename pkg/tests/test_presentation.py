import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from planar_cayley.catalog import DomainError, rows
from planar_cayley.presentation import (
    ExponentError,
    PresentationSyntaxError,
    UndeclaredSymbolError,
    instantiate_entry,
    is_simple_on,
    parse_presentation,
    parse_word,
    word_extension,
)
from planar_cayley.words import cyclic_variants, letters_string, reduce_seam


def texts(p):
    return {letters_string(r) for r in p.relators}, {letters_string(r) for r in p.dividing}


class TestParse:
    def test_prism(self):
        p = parse_presentation("<a,b | b^2, a^3, (ab)^2>")
        assert p.symbols == ("a", "b")
        assert p.involutions == frozenset("b")
        assert texts(p) == ({"aaa", "abab"}, set())

    def test_dividing_part(self):
        p = parse_presentation("<a,b | b^2, (a^2 b)^2; (ab)^4>")
        assert texts(p) == ({"aabaab"}, {"abababab"})

    def test_unterminated(self):
        with pytest.raises(PresentationSyntaxError, match="position"):
            parse_presentation("<a,b | b^2, a b,")

    def test_undeclared(self):
        with pytest.raises(UndeclaredSymbolError):
            parse_presentation("<a,b | b^2, x^2>")

    @pytest.mark.parametrize("exp", ["0", "-2"])
    def test_bad_exponent(self, exp):
        with pytest.raises(ExponentError):
            parse_presentation(f"<a,b | b^2, a^{exp}>")

    def test_inverse_letters(self):
        p = parse_presentation("<a,b | b^2, (aba^-1b)^2>")
        assert (("a", -1) in p.relators[0]) and len(p.relators[0]) == 8


class TestInstantiate:
    def test_aoi(self):
        assert instantiate_entry("Aoi", {"n": 3, "m": 2}).to_text() == "<a, b | b^2, a^3, (ab)^2>"

    def test_pattern_row(self):
        p = instantiate_entry("AIIciii", {"P": "(dcbcdcbcbc)^2"})
        assert texts(p) == (set(), {"dcbcdcbcbc" * 2})
        assert p.involutions == frozenset("bcd")

    def test_domain_error_names_constraint(self):
        with pytest.raises(DomainError, match="n >= 3"):
            instantiate_entry("Aoi", {"n": 2, "m": 2})

    @pytest.mark.parametrize("entry", rows(), ids=lambda e: e.name)
    def test_minimal_parameters_instantiate(self, entry):
        p = instantiate_entry(entry, entry.param_set("minimal"))
        assert p.all_relators

    @pytest.mark.parametrize("entry", rows(), ids=lambda e: e.name)
    def test_text_round_trip(self, entry):
        p = instantiate_entry(entry, entry.param_set("minimal"))
        assert parse_presentation(p.to_text()) == p


class TestWordExtension:
    def test_square_substitution(self):
        p = parse_presentation("<z,b | b^2, z^3, (zb)^2>")
        assert word_extension(p, {"z": "a^2"}).to_text() == "<a, b | b^2, a^6, (aab)^2>"

    def test_identity(self):
        p = parse_presentation("<a,b | b^2, a^3, (ab)^2>")
        assert word_extension(p, {}) == p

    def test_seam_cancellation(self):
        # e stands in for the starred generator; n = r = m = 2
        p = parse_presentation("<e,z,d | e^2, z^2, d^2, (ez)^4, (zezd)^2>")
        out = word_extension(p, {"e": "bcdcb", "z": "cbc"}, involutions="bcd")
        want = parse_word("(cbcbcd)^4", "bcd", set("bcd"))
        assert any(want in cyclic_variants(r, out.involutions) for r in out.relators)

    def test_seam_pairs_cancel(self):
        p = parse_presentation("<x,y | (xy)^2>")
        out = word_extension(p, {"x": "ab", "y": "b^-1a"})
        assert letters_string(out.relators[0]) == "aaaa"

    @settings(max_examples=40, deadline=None)
    @given(st.text("xy", min_size=1, max_size=5), st.text("xy", min_size=1, max_size=5))
    def test_distributes_over_concatenation(self, r1, r2):
        assume(r1 != r2)
        sub = {"x": "aab", "y": "ba^-1"}
        whole = word_extension(parse_presentation(f"<x,y | {r1}{r2}>"), sub)
        parts = word_extension(parse_presentation(f"<x,y | {r1}, {r2}>"), sub)
        assert whole.relators[0] == reduce_seam(parts.relators[0], parts.relators[1], frozenset())


class TestSimple:
    def test_triangle(self, prism):
        assert is_simple_on(prism, parse_word("aaa", "ab", {"b"}))

    def test_square(self, prism):
        assert is_simple_on(prism, parse_word("abab", "ab", {"b"}))

    def test_wrapped_twice(self, prism):
        assert not is_simple_on(prism, parse_word("a^6", "ab", {"b"}))
