import pytest

from staircase.binomial import (
    Binomial,
    divides,
    expo_lcm,
    grevlex_greater,
    lex_greater,
    normal_form,
    reduce_monomial,
    s_binomial,
    total_degree,
)
from staircase.errors import DomainError


def test_grevlex_order():
    # degree first
    assert grevlex_greater((2, 0, 0), (1, 0, 0))
    # same degree: smaller in the last differing slot wins
    assert grevlex_greater((0, 2, 0), (1, 0, 1))
    assert grevlex_greater((1, 1, 0), (1, 0, 1))
    assert not grevlex_greater((1, 0, 1), (0, 2, 0))
    assert not grevlex_greater((1, 1), (1, 1))


def test_quadric_leads_under_grevlex():
    # x_j^2 beats x_{j-1} x_{j+1}
    assert grevlex_greater((0, 2, 0, 0), (1, 0, 1, 0))
    assert grevlex_greater((0, 0, 2, 0), (0, 1, 0, 1))


def test_lex_order():
    assert lex_greater((1, 0, 0), (0, 5, 5))
    assert not lex_greater((0, 1), (1, 0))


def test_binomial_keeps_common_factors():
    b = Binomial((1, 2, 0), (1, 0, 1))
    assert b.u == (1, 2, 0)
    assert b.primitive_part() == Binomial((0, 2, 0), (0, 0, 1))


def test_binomial_rejects_equal_sides():
    with pytest.raises(DomainError):
        Binomial((1, 0), (1, 0))
    with pytest.raises(DomainError):
        Binomial((1, 0), (1, 0, 0))
    with pytest.raises(DomainError):
        Binomial((-1, 0), (0, 1))


def test_in_kernel():
    assert Binomial((2, 0), (0, 1)).in_kernel((1, 2))
    assert not Binomial((2, 0), (0, 1)).in_kernel((1, 3))


def test_degree_is_max_side():
    assert Binomial((3, 0), (0, 1)).degree() == 3
    assert total_degree((1, 2, 0)) == 3


def test_format():
    b = Binomial((1, 0, 1, 0), (0, 2, 0, 0))
    assert b.format(["a", "b", "c", "d"]) == "a*c - b^2"


def test_s_binomial():
    f = Binomial((0, 2, 0, 0), (1, 0, 1, 0)).oriented()
    g = Binomial((0, 1, 1, 0), (1, 0, 0, 1)).oriented()
    s = s_binomial(f, g)
    # lcm of the leads x1^2 and x1 x2 is x1^2 x2
    assert expo_lcm(f.u, g.u) == (0, 2, 1, 0)
    assert s == Binomial((1, 0, 2, 0), (1, 1, 0, 1)).oriented()


def test_s_binomial_cancels_to_none():
    f = Binomial((2, 0), (0, 1)).oriented()
    assert s_binomial(f, f) is None


def test_reduce_monomial():
    basis = (Binomial((2, 0), (0, 1)).oriented(),)
    assert reduce_monomial((3, 0), basis, grevlex_greater) == (1, 1)


def test_normal_form_zero_and_nonzero():
    basis = (Binomial((2, 0, 0), (0, 1, 0)).oriented(),)
    # x0^2 x1 - x1^2 reduces to zero
    assert normal_form(Binomial((2, 1, 0), (0, 2, 0)), basis) is None
    nf = normal_form(Binomial((2, 0, 0), (0, 0, 1)), basis)
    assert nf == Binomial((0, 1, 0), (0, 0, 1)).oriented()


def test_divides():
    assert divides((1, 0, 1), (2, 0, 1))
    assert not divides((1, 0, 1), (0, 1, 2))
