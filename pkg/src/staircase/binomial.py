"""Pure-difference binomials x^u - x^v and their monomial arithmetic.

Exponent vectors are plain tuples of naturals.  Coefficients are
always +1 and -1; the rewriting helpers check the invariants that
keep it that way at every step (oriented divisors, strictly
decreasing rewrites) and abort rather than silently leave the
binomial world.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

Expo = tuple[int, ...]


def expo_mul(a: Expo, b: Expo) -> Expo:
    return tuple(x + y for x, y in zip(a, b))


def expo_div(a: Expo, b: Expo) -> Expo:
    """Divide monomial a by b; b must divide a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise RuntimeError(f"monomial {b} does not divide {a}")
    return out


def expo_lcm(a: Expo, b: Expo) -> Expo:
    return tuple(max(x, y) for x, y in zip(a, b))


def divides(a: Expo, b: Expo) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def total_degree(a: Expo) -> int:
    return sum(a)


def grevlex_greater(a: Expo, b: Expo) -> bool:
    """Graded reverse lexicographic order with variable 0 largest."""
    da, db = sum(a), sum(b)
    if da != db:
        return da > db
    for i in range(len(a) - 1, -1, -1):
        d = a[i] - b[i]
        if d:
            return d < 0
    return False


def lex_greater(a: Expo, b: Expo) -> bool:
    """Plain lexicographic order with variable 0 largest."""
    return a > b


@dataclass(frozen=True)
class Binomial:
    """The difference x^u - x^v of two distinct monomials.

    Kernel relations and Graver elements always come with disjoint
    supports; intermediate Groebner elements may legitimately carry a
    common factor, and cancelling it there would change the ideal, so
    cancellation is the explicit ``primitive_part`` and never implicit.

    >>> Binomial((2, 1, 0), (0, 2, 1)).primitive_part()
    Binomial(u=(2, 0, 0), v=(0, 1, 1))
    """

    u: Expo
    v: Expo

    def __post_init__(self) -> None:
        u, v = tuple(self.u), tuple(self.v)
        if len(u) != len(v):
            raise DomainError(f"side lengths differ: {len(u)} vs {len(v)}")
        if any(x < 0 for x in u + v):
            raise DomainError("exponents must be naturals")
        if u == v:
            raise DomainError("the zero binomial is not representable")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def nvars(self) -> int:
        return len(self.u)

    def has_disjoint_supports(self) -> bool:
        return not any(x and y for x, y in zip(self.u, self.v))

    def primitive_part(self) -> Binomial:
        """Cancel the common monomial factor of the two sides."""
        common = tuple(min(x, y) for x, y in zip(self.u, self.v))
        if not any(common):
            return self
        return Binomial(expo_div(self.u, common), expo_div(self.v, common))

    def degree(self) -> int:
        return max(sum(self.u), sum(self.v))

    def in_kernel(self, weights: tuple[int, ...] | list[int]) -> bool:
        """Whether the binomial vanishes under x_i -> t^(weights[i]).

        >>> Binomial((1, 0, 1, 0, 1, 0, 0), (0,) * 5 + (1, 0)).in_kernel(
        ...     (1, 2, 3, 4, 5, 9, 6))
        True
        """
        if len(weights) != self.nvars:
            raise DomainError(
                f"{len(weights)} weights for {self.nvars} variables"
            )
        return sum(e * w for e, w in zip(self.u, weights)) == sum(
            e * w for e, w in zip(self.v, weights)
        )

    def flipped(self) -> Binomial:
        return Binomial(self.v, self.u)

    def oriented(self, greater=grevlex_greater) -> Binomial:
        """The same binomial up to sign, with the larger side first."""
        return self if greater(self.u, self.v) else self.flipped()

    def same_up_to_sign(self, other: Binomial) -> bool:
        return (self.u, self.v) in ((other.u, other.v), (other.v, other.u))

    def format(self, names: list[str] | None = None) -> str:
        ns = names if names is not None else [f"x{i}" for i in range(self.nvars)]
        return f"{format_monomial(self.u, ns)} - {format_monomial(self.v, ns)}"

    def to_json(self) -> dict:
        return {"u": list(self.u), "v": list(self.v)}


def format_monomial(e: Expo, names: list[str]) -> str:
    if not any(e):
        return "1"
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def s_binomial(f: Binomial, g: Binomial) -> Binomial | None:
    """S-polynomial of two oriented binomials; None when it cancels.

    Both inputs must already have their leading side in ``u``.  The
    result is x^(L-u_f+v_f) - x^(L-u_g+v_g) for L = lcm of the leads,
    again a pure difference, so no trinomial can appear here.
    """
    lcm = expo_lcm(f.u, g.u)
    a = expo_mul(expo_div(lcm, f.u), f.v)
    b = expo_mul(expo_div(lcm, g.u), g.v)
    if a == b:
        return None
    return Binomial(a, b)


def reduce_monomial(
    m: Expo, basis: list[Binomial] | tuple[Binomial, ...], greater=grevlex_greater
) -> Expo:
    """Rewrite x^m by lead -> trail until no lead divides; returns the rest.

    Each basis element must be oriented.  Every step replaces a
    monomial by a strictly smaller monomial, which is what keeps the
    arithmetic inside single monomials; a step that fails to decrease
    aborts because it would break termination and binomiality.
    """
    current = m
    changed = True
    while changed:
        changed = False
        for g in basis:
            if divides(g.u, current):
                nxt = expo_mul(expo_div(current, g.u), g.v)
                if not greater(current, nxt):
                    raise RuntimeError(
                        f"rewriting {current} -> {nxt} does not decrease; "
                        "basis element not oriented?"
                    )
                current = nxt
                changed = True
                break
    return current


def normal_form(
    b: Binomial, basis: list[Binomial] | tuple[Binomial, ...], greater=grevlex_greater
) -> Binomial | None:
    """Normal form of a binomial modulo oriented binomials; None if zero."""
    p = reduce_monomial(b.u, basis, greater)
    q = reduce_monomial(b.v, basis, greater)
    if p == q:
        return None
    return Binomial(p, q)
