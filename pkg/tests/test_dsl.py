"""Grammar round-trips and parse errors for the textual mini-language."""

from fractions import Fraction

import pytest

from ordcut import dsl, sampling
from ordcut.errors import DomainError, ParseError
from ordcut.lexgroups import LexGroup, widening
from ordcut.hahnomega import OmegaGroup, omega_gap_at, omega_periodic, omega_point
from ordcut.scalars import KIND_Q, KIND_Z, Scalar, quad_q, quad_z

GROUP_TEXTS = ["lex(Z)", "lex(Z,Z)", "lex(Z,Q)", "lex(Z,Z,Q)",
               "lex(Z[sqrt 2],Q)", "lex(Q[sqrt 5])", "lex()",
               "hahn_omega(Z)", "hahn_omega(Q)"]


def test_group_round_trip():
    for text in GROUP_TEXTS:
        g = dsl.parse_group(text)
        printed = dsl.print_group(g)
        assert dsl.parse_group(printed) == g


def test_scalar_round_trip():
    samples = [Scalar.make(3), Scalar.make(Fraction(-7, 5)),
               Scalar.make(1, 2, 2), Scalar.make(Fraction(1, 3), -1, 5),
               Scalar.make(0, 1, 8)]
    for x in samples:
        assert dsl.parse_scalar(dsl.print_scalar(x)) == x


def test_element_and_cut_round_trip():
    rng = sampling.rng_for(0)
    for text in ("lex(Z,Z)", "lex(Z,Q)", "lex(Z[sqrt 2],Q)"):
        g = dsl.parse_group(text)
        for _ in range(30):
            x = sampling.sample_element(g, rng, 6)
            assert dsl.parse_element(dsl.print_element(x), g) == x
            c = sampling.sample_descriptor(g, rng, 6)
            assert dsl.parse_cut(dsl.print_cut(c), g) == c


def test_omega_round_trip():
    gz = OmegaGroup(KIND_Z)
    gq = OmegaGroup(KIND_Q)
    rng = sampling.rng_for(0)
    for _ in range(30):
        x = sampling.sample_omega_element(gz, rng, 6)
        assert dsl.parse_oelement(dsl.print_oelement(x), gz) == x
    anchors = [omega_point(gz, [(0, 2), (3, -1)]),
               omega_periodic(gz, (2, 0), (1, 3)),
               omega_gap_at(gq, [(0, Fraction(1, 2))], 2, Scalar.make(0, 1, 2))]
    for a in anchors:
        assert dsl.parse_oanchor(dsl.print_oanchor(a), a.group) == a


def test_morphism_round_trip():
    g = dsl.parse_group("lex(Z,Q)")
    m = dsl.parse_morphism("widen", g)
    assert m == widening(g)
    assert dsl.print_morphism(m) == "widen"
    m2 = dsl.parse_morphism("scale(2,1/3)", g)
    assert m2.scales == (Fraction(2), Fraction(1, 3))
    assert m2.cod == LexGroup((KIND_Z, KIND_Q))
    assert dsl.parse_morphism(dsl.print_morphism(m2), g) == m2
    # non-integral scaling of Z forces the divisible hull on that factor
    m3 = dsl.parse_morphism("scale(1/2,1)", g)
    assert m3.cod == LexGroup((KIND_Q, KIND_Q))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as e:
        dsl.parse_group("lex(Z,X)")
    assert "position" in str(e.value)
    with pytest.raises(ParseError):
        dsl.parse_group("lex(Z,Z) trailing")
    g = dsl.parse_group("lex(Z,Z)")
    with pytest.raises(ParseError):
        dsl.parse_element("[1]", g)  # wrong arity
    with pytest.raises(ParseError):
        dsl.parse_cut("betwixt([1,2]; C 1)", g)
    with pytest.raises(ParseError):
        dsl.parse_scalar("1/0")


def test_domain_errors_from_parsed_cuts():
    g = dsl.parse_group("lex(Z)")
    with pytest.raises(DomainError):
        dsl.parse_cut("gap([]; 1; 1/2)", g)
    gq = dsl.parse_group("lex(Q)")
    with pytest.raises(DomainError):
        dsl.parse_cut("gap([]; 1; 1/2)", gq)
