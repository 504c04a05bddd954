"""Chromatic polynomials and two-colour separations of layered graphs.

Everything is exact integer arithmetic.  The deletion-contraction
recursion strips low-degree vertices before branching, so the branch
count is bounded by 2^(cycle rank), and a guard refuses graphs whose
cycle rank makes that infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError, ResourceLimitError
from .graphs import SimpleGraph
from .layered import build_layered_graph
from .partition import Partition, is_staircase, staircase
from .poly import IntPolynomial
from .report import INVARIANT, Report, check

DEFAULT_CYCLE_RANK_CAP = 24

_K = IntPolynomial.variable()
_K_MINUS_1 = IntPolynomial((-1, 1))
# chromatic polynomial of a 4-cycle divided by k(k-1)
_SQUARE_FACTOR = IntPolynomial((3, -3, 1))


def chromatic_polynomial(
    g: SimpleGraph, cap_cyclerank: int = DEFAULT_CYCLE_RANK_CAP
) -> IntPolynomial:
    """Chromatic polynomial by deletion-contraction.

    >>> square = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> chromatic_polynomial(square).format()
    'k^4 - 4k^3 + 6k^2 - 3k'
    """
    rank = g.cycle_rank()
    if rank > cap_cyclerank:
        raise ResourceLimitError(
            f"cycle rank {rank} exceeds the recursion cap {cap_cyclerank}"
        )
    adj: dict[int, set[int]] = {v: set(nbrs) for v, nbrs in enumerate(g.adjacency())}
    return _chi(adj)


def _chi(adj: dict[int, set[int]]) -> IntPolynomial:
    factor = IntPolynomial.constant(1)
    # peel isolated and pendant vertices until none remain
    while True:
        target = None
        for v in sorted(adj):
            if len(adj[v]) <= 1:
                target = v
                break
        if target is None:
            break
        factor = factor * (_K if not adj[target] else _K_MINUS_1)
        for w in adj[target]:
            adj[w].discard(target)
        del adj[target]
    if not adj:
        return factor
    u = min(adj)
    v = min(adj[u])
    deleted = {w: set(nbrs) for w, nbrs in adj.items()}
    deleted[u].discard(v)
    deleted[v].discard(u)
    contracted = {w: set(nbrs) for w, nbrs in adj.items() if w != v}
    for w in adj[v]:
        if w != u:
            contracted[w].discard(v)
            contracted[w].add(u)
            contracted[u].add(w)
    contracted[u].discard(v)
    return factor * (_chi(deleted) - _chi(contracted))


def square_chain(d: int) -> SimpleGraph:
    """Ladder of d squares glued edge to edge: 2(d+1) vertices.

    Vertex 2i is the top of rung i, vertex 2i+1 the bottom.
    """
    if d < 1:
        raise DomainError(f"need at least one square, got {d}")
    edges = []
    for i in range(d + 1):
        edges.append((2 * i, 2 * i + 1))
    for i in range(d):
        edges.append((2 * i, 2 * i + 2))
        edges.append((2 * i + 1, 2 * i + 3))
    return SimpleGraph.from_edges(2 * (d + 1), edges)


def square_chain_closed_form(d: int) -> IntPolynomial:
    """k(k-1)(k^2-3k+3)^d, the chromatic polynomial of the d-square ladder.

    >>> square_chain_closed_form(1).format()
    'k^4 - 4k^3 + 6k^2 - 3k'
    """
    if d < 1:
        raise DomainError(f"need at least one square, got {d}")
    return _K * _K_MINUS_1 * _SQUARE_FACTOR**d


def layered_closed_form(ell: int) -> IntPolynomial:
    """The claimed closed form k(k-1)^3 (k^2-3k+3)^m with m = C(ell-1, 2).

    Its degree is 4 + 2m, which equals the vertex count C(ell+1, 2) only
    for ell = 3 and 4; see closed_form_report for the audit.
    """
    if ell < 3:
        raise DomainError(f"closed form starts at length 3, got {ell}")
    m = comb(ell - 1, 2)
    return _K * _K_MINUS_1**3 * _SQUARE_FACTOR**m


def closed_form_report(ell_min: int = 3, ell_max: int = 6) -> Report:
    """Claimed closed form against the deletion-contraction value per length."""
    if ell_min < 3 or ell_max < ell_min:
        raise DomainError("need 3 <= ell_min <= ell_max")
    rep = Report(f"layered closed form vs recursion, lengths {ell_min}..{ell_max}")
    for ell in range(ell_min, ell_max + 1):
        formula = layered_closed_form(ell)
        vertices = comb(ell + 1, 2)
        actual = chromatic_polynomial(build_layered_graph(staircase(ell)).as_simple())
        rep.add(
            check(
                f"formula degree at length {ell}",
                formula.degree(),
                vertices,
                note="a chromatic polynomial has degree equal to the vertex count",
            )
        )
        rep.add(
            check(
                f"formula equals recursion at length {ell}",
                formula == actual,
                True,
            )
        )
        rep.add(
            check(
                f"recursion degree at length {ell}",
                actual.degree(),
                vertices,
                kind=INVARIANT,
            )
        )
    return rep


def chromatic_number(g: SimpleGraph, cap_cyclerank: int = DEFAULT_CYCLE_RANK_CAP) -> int:
    """Least positive t with a proper t-colouring, via the polynomial.

    >>> chromatic_number(SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    3
    """
    if g.n == 0:
        raise DomainError("chromatic number of the empty graph is undefined here")
    chi = chromatic_polynomial(g, cap_cyclerank)
    t = 1
    while chi(t) <= 0:
        t += 1
    # bipartiteness gives an independent bound in both directions
    if g.is_bipartite():
        assert t <= 2, "bipartite graph needs more than 2 colours by the polynomial"
    elif g.edges:
        assert t >= 3, "odd cycle present but polynomial positive at 2"
    return t


@dataclass(frozen=True)
class ColourSeparation:
    """Vertex counts of the two colour classes of a layered graph."""

    mu: int
    kappa: int

    @property
    def balance(self) -> int:
        return self.mu - self.kappa

    def to_json(self) -> dict:
        return {"mu": self.mu, "kappa": self.kappa, "balance": self.balance}


def colour_separation(p: Partition) -> ColourSeparation:
    """Colour-class sizes by alternating layers; mu takes layer 1.

    Layer i of the staircase of length l has l+1-i vertices, and the
    proper 2-colouring is constant on layers, so mu sums the odd-indexed
    layer sizes and kappa the even-indexed ones.

    >>> colour_separation(staircase(5))
    ColourSeparation(mu=9, kappa=6)
    """
    if not is_staircase(p):
        raise DomainError(f"{p.parts} is not a staircase")
    ell = p.length
    sizes = [ell + 1 - i for i in range(1, ell + 1)]
    mu = sum(sizes[0::2])
    kappa = sum(sizes[1::2])
    return ColourSeparation(mu, kappa)


def balance_bound_check(ell_max: int) -> Report:
    """Balance against the ceiling bound, length by length.

    The equality row compares what happens against the even-length-only
    prediction; the closed forms for the class sizes make the bound an
    equality at every length, so odd lengths show as mismatches.
    """
    if ell_max < 1:
        raise DomainError(f"need a positive length bound, got {ell_max}")
    rep = Report(f"balance bound through length {ell_max}")
    for ell in range(1, ell_max + 1):
        sep = colour_separation(staircase(ell))
        bound = (ell + 1) // 2
        rep.add(
            check(
                f"balance within bound at length {ell}",
                sep.balance <= bound,
                True,
                kind=INVARIANT,
                note=f"balance {sep.balance}, bound {bound}",
            )
        )
        rep.add(
            check(
                f"equality only at even lengths, length {ell}",
                sep.balance == bound,
                ell % 2 == 0,
                note="class-size closed forms force equality at every length",
            )
        )
    return rep


def shared_balance_check(k: int) -> bool:
    """Both members of the length pair (2k-1, 2k) have balance k.

    >>> shared_balance_check(3)
    True
    """
    if k < 1:
        raise DomainError(f"balance parameter must be positive, got {k}")
    odd = colour_separation(staircase(2 * k - 1)).balance
    even = colour_separation(staircase(2 * k)).balance
    return odd == even == k
