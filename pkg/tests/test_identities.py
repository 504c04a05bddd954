import pytest

from staircase.binomial import Binomial
from staircase.errors import (
    DomainError,
    InvalidIdentityError,
    ResourceLimitError,
)
from staircase.identities import (
    colour_separation_identity,
    graver_basis,
    is_primitive,
    make_identity,
    parity_split,
    primitive_subidentities,
    proper_subidentities,
    subidentity_report,
)
from staircase.partition import staircase


def test_make_identity_sorts_and_validates():
    ident = make_identity([2, 1, 3], [6], 6)
    assert ident.lhs == (3, 2, 1)
    assert ident.rhs == (6,)
    assert ident.total == 6
    with pytest.raises(InvalidIdentityError):
        make_identity([1, 2], [4], 4)
    with pytest.raises(DomainError):
        make_identity([1, 9], [10], 8)
    with pytest.raises(DomainError):
        make_identity([], [0], 3)


def test_identity_str_form():
    assert str(colour_separation_identity(staircase(5))) == "1+2+3+4+5 = 9+6"


def test_proper_subidentities_exclude_trivial():
    ident = make_identity([1, 2, 3], [6], 6)
    subs = proper_subidentities(ident)
    # only 1+2+3 = 6 itself sums to 6, so nothing proper remains
    assert subs == []
    assert is_primitive(ident)


def test_multiset_subidentities():
    ident = make_identity([2, 2], [4], 4)
    assert proper_subidentities(ident) == []
    assert is_primitive(ident)
    wider = make_identity([2, 2, 4], [4, 4], 4)
    subs = proper_subidentities(wider)
    assert make_identity([4], [4], 4) in subs
    assert make_identity([2, 2], [4], 4) in subs
    assert not is_primitive(wider)


def test_cspi_5_primitive_census():
    ident = colour_separation_identity(staircase(5))
    prims = primitive_subidentities(ident)
    assert len(prims) == 6
    shapes = {str(p) for p in prims}
    assert shapes == {
        "1+2+3 = 6",
        "2+4 = 6",
        "1+5 = 6",
        "2+3+4 = 9",
        "1+3+5 = 9",
        "4+5 = 9",
    }


def test_cspi_6_primitive_census():
    ident = colour_separation_identity(staircase(6))
    assert len(primitive_subidentities(ident)) == 10


def test_parity_split():
    # the first half always carries the parts sharing the length's parity
    mu5, kappa5 = parity_split(staircase(5))
    assert str(mu5) == "1+3+5 = 9"
    assert str(kappa5) == "2+4 = 6"
    mu6, kappa6 = parity_split(staircase(6))
    assert str(mu6) == "2+4+6 = 12"
    assert str(kappa6) == "1+3+5 = 9"


def test_parity_splits_are_primitive_through_9():
    for ell in range(5, 10):
        ident = colour_separation_identity(staircase(ell))
        prims = primitive_subidentities(ident)
        hits = [p for p in parity_split(staircase(ell)) if p in prims]
        assert len(hits) == 2
        matches = [p for p in prims if p in parity_split(staircase(ell))]
        assert len(matches) == 2


def test_subidentity_report_rows():
    rep = subidentity_report(staircase(5))
    by_name = {r.name: r for r in rep.rows}
    assert by_name["all parts distinct"].verdict == "MATCH"
    assert by_name["identity is primitive"].verdict == "MATCH"
    assert by_name["primitive subidentity count"].verdict == "MISMATCH"
    assert by_name["primitive subidentity count"].observed == 6
    assert by_name["subidentities equal to a parity split"].verdict == "MATCH"
    assert not rep.invariant_failures()


def test_part_count_guard():
    ident = make_identity(list(range(1, 22)), [sum(range(1, 22))], 300)
    with pytest.raises(ResourceLimitError):
        proper_subidentities(ident)


def test_graver_basis_tiny():
    basis = graver_basis((1, 2), 2)
    assert basis == (Binomial((2, 0), (0, 1)),)


def test_graver_basis_three_weights():
    basis = graver_basis((1, 2, 3), 3)
    got = {b.format(["x1", "x2", "x3"]) for b in basis}
    assert got == {
        "x1^2 - x2",
        "x1*x2 - x3",
        "x1^3 - x3",
        "x1*x3 - x2^2",
        "x2^3 - x3^2",
    }


def test_graver_elements_are_primitive_relations():
    weights = (2, 3, 7)
    for b in graver_basis(weights, 4):
        assert b.in_kernel(weights)
        assert b.has_disjoint_supports()


def test_graver_validates_weights():
    with pytest.raises(DomainError):
        graver_basis((1, 1), 2)
    with pytest.raises(DomainError):
        graver_basis((0, 2), 2)
    with pytest.raises(DomainError):
        graver_basis((1, 2), 0)


def test_graver_state_cap():
    with pytest.raises(ResourceLimitError):
        graver_basis(tuple(range(1, 9)), 6, state_cap=50)
