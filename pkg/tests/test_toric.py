import pytest
import sympy

from staircase.binomial import Binomial, grevlex_greater, normal_form, s_binomial
from staircase.errors import DomainError, ResourceLimitError
from staircase.identities import make_identity
from staircase.partition import staircase
from staircase.toric import (
    MonomialIdeal,
    audit_quadric_chain_ideal,
    audit_separation_ideal,
    consecutive_quadric_ideal,
    groebner_basis,
    hilbert,
    hilbert_function_prefix,
    identity_binomial,
    initial_ideal,
    separation_ideal,
    standard_monomial_counts,
    weight_chain_diagram,
)


def _sympy_groebner(gens: list[Binomial], nvars: int) -> set[tuple[tuple, tuple]]:
    xs = sympy.symbols(f"x0:{nvars}")
    polys = []
    for b in gens:
        m1 = sympy.prod([x**e for x, e in zip(xs, b.u)])
        m2 = sympy.prod([x**e for x, e in zip(xs, b.v)])
        polys.append(m1 - m2)
    gb = sympy.groebner(polys, *xs, order="grevlex")
    out = set()
    for poly in gb.polys:
        terms = poly.terms()
        assert len(terms) == 2, "reduced basis of a binomial ideal stays binomial"
        (e1, c1), (e2, c2) = terms
        assert {int(c1), int(c2)} == {1, -1}
        if int(c1) == 1:
            out.add((tuple(e1), tuple(e2)))
        else:
            out.add((tuple(e2), tuple(e1)))
    return out


def _as_pairs(basis) -> set[tuple[tuple, tuple]]:
    return {(b.u, b.v) for b in basis}


def test_twisted_cubic_pair_is_already_a_basis():
    gens = [Binomial((1, 0, 1, 0), (0, 2, 0, 0)), Binomial((0, 1, 0, 1), (0, 0, 2, 0))]
    gb = groebner_basis(gens)
    assert _as_pairs(gb) == _sympy_groebner(gens, 4)
    assert len(gb) == 2


def test_completion_adds_one_element():
    gens = [Binomial((1, 0, 1, 0), (0, 2, 0, 0)), Binomial((1, 0, 0, 1), (0, 1, 1, 0))]
    gb = groebner_basis(gens)
    assert len(gb) == 3
    assert _as_pairs(gb) == _sympy_groebner(gens, 4)
    # the new element keeps its x0 factor: the engine must not saturate
    assert Binomial((1, 0, 2, 0), (1, 1, 0, 1)) in gb


def test_groebner_all_s_pairs_reduce_to_zero():
    gens = [Binomial((1, 0, 1, 0), (0, 2, 0, 0)), Binomial((1, 0, 0, 1), (0, 1, 1, 0))]
    gb = groebner_basis(gens)
    for i, f in enumerate(gb):
        for g in gb[i + 1:]:
            s = s_binomial(f, g)
            if s is not None:
                assert normal_form(s, gb) is None


def test_separation_ideal_basis_matches_sympy():
    for ell in (5, 6):
        ideal = separation_ideal(staircase(ell))
        gb = groebner_basis(ideal.generators)
        assert _as_pairs(gb) == _sympy_groebner(list(ideal.generators), ideal.nvars)


def test_quadric_chain_basis_matches_sympy():
    for ell in (3, 4, 5):
        ideal = consecutive_quadric_ideal(ell)
        gb = groebner_basis(ideal.generators)
        assert _as_pairs(gb) == _sympy_groebner(list(ideal.generators), ideal.nvars)
        assert len(gb) == ell - 1


def test_initial_ideal_of_quadric_chain():
    ideal = consecutive_quadric_ideal(4)
    gb = groebner_basis(ideal.generators)
    mi = initial_ideal(gb, ideal.nvars)
    squares = {tuple(2 if i == j else 0 for i in range(5)) for j in (1, 2, 3)}
    assert set(mi.gens) == squares


def test_hilbert_examples():
    one_gen = MonomialIdeal(4, ((1, 0, 1, 0),))
    hd = hilbert(one_gen)
    assert (hd.dimension, hd.degree) == (3, 2)
    two_gen = MonomialIdeal(4, ((1, 0, 1, 0), (0, 1, 0, 1)))
    hd = hilbert(two_gen)
    assert (hd.dimension, hd.degree) == (2, 4)


def test_hilbert_zero_ring():
    unit = MonomialIdeal(3, ((0, 0, 0),))
    hd = hilbert(unit)
    assert hd.dimension == -1
    assert hd.numerator.is_zero


def test_hilbert_polynomial_ring():
    free = MonomialIdeal(3, ())
    hd = hilbert(free)
    assert (hd.dimension, hd.degree) == (3, 1)


def test_hilbert_against_direct_count():
    ideals = [
        MonomialIdeal(3, ((2, 0, 0), (0, 1, 1))),
        MonomialIdeal(4, ((1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1))),
        MonomialIdeal(5, ((2, 0, 0, 0, 0), (0, 2, 0, 0, 0), (1, 0, 1, 0, 1))),
    ]
    for mi in ideals:
        hd = hilbert(mi)
        assert hilbert_function_prefix(hd, mi.nvars, 8) == standard_monomial_counts(mi, 8)


def test_hilbert_caps():
    with pytest.raises(ResourceLimitError):
        hilbert(MonomialIdeal(17, ()))


def test_identity_binomial():
    ident = make_identity([1, 3, 5], [9], 9)
    b = identity_binomial(ident, (1, 2, 3, 4, 5, 9, 6))
    assert b == Binomial((1, 0, 1, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1, 0))
    with pytest.raises(DomainError):
        identity_binomial(ident, (1, 2, 3))


def test_separation_ideal_shape():
    ideal = separation_ideal(staircase(5))
    assert ideal.nvars == 7
    assert ideal.weights == (1, 2, 3, 4, 5, 9, 6)
    assert len(ideal.generators) == 2
    for g in ideal.generators:
        assert g.in_kernel(ideal.weights)


def test_audit_separation_ideal_5():
    rep = audit_separation_ideal(5)
    assert not rep.invariant_failures()
    by_name = {r.name: r for r in rep.rows}
    assert by_name["dimension"].observed == 5
    assert by_name["degree"].observed == 6
    probe = by_name["kernel probe x1^2 - x2 reduces to zero"]
    assert probe.observed is False
    assert "normal form" in probe.note


def test_audit_separation_ideal_6():
    rep = audit_separation_ideal(6)
    assert not rep.invariant_failures()
    by_name = {r.name: r for r in rep.rows}
    assert by_name["dimension"].observed == 6
    assert by_name["degree"].observed == 9


def test_audit_quadric_chain_small():
    for ell, degree in ((2, 2), (3, 4), (4, 8), (5, 16)):
        rep = audit_quadric_chain_ideal(ell)
        assert rep.all_match()
        by_name = {r.name: r for r in rep.rows}
        assert by_name["dimension"].observed == 2
        assert by_name["degree"].observed == degree


def test_weight_chain_diagram():
    chain = weight_chain_diagram(staircase(3))
    assert chain.top_weights == (3, 2, 1)
    assert chain.bottom_weights == (2, 1, 0)
    dot = chain.to_dot()
    assert "b0 -> t0" in dot
    assert "t0 -> t1" in dot
