"""Layered graphs on the diagonals of a staircase Ferrers diagram.

The cells of the staircase (l, l-1, ..., 1) sit on anti-diagonals
a + b = d; layer i (1-based) collects the diagonal with l + 1 - i
cells, so layer 1 is the long hypotenuse and layer l the corner cell.
Two cells are adjacent exactly when they share a side, which moves
between consecutive diagonals, making the graph layered with no edges
inside a layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DomainError, ResourceLimitError
from .graphs import SimpleGraph
from .partition import Partition, distinct_odd_parts, is_staircase, staircase
from .poly import IntPolynomial
from .report import INVARIANT, Report, check
from .rwgraph import WordGraph

VertexId = tuple[int, int]  # (layer, index within layer)

DEFAULT_ISO_CAP = 28


@dataclass(frozen=True)
class LayeredGraph:
    partition: Partition
    # layer_cells[i-1][j] is the Ferrers cell behind vertex id (i, j),
    # each layer sorted by the cell coordinate b ascending
    layer_cells: tuple[tuple[tuple[int, int], ...], ...]
    edges: tuple[tuple[VertexId, VertexId], ...]

    @property
    def layer_count(self) -> int:
        return len(self.layer_cells)

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layer_cells)

    @property
    def vertex_count(self) -> int:
        return sum(self.layer_sizes())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_ids(self) -> tuple[VertexId, ...]:
        return tuple(
            (i + 1, j)
            for i, layer in enumerate(self.layer_cells)
            for j in range(len(layer))
        )

    def cell_of(self, vid: VertexId) -> tuple[int, int]:
        i, j = vid
        return self.layer_cells[i - 1][j]

    def as_simple(self) -> SimpleGraph:
        index = {vid: k for k, vid in enumerate(self.vertex_ids())}
        return SimpleGraph.from_edges(
            len(index), [(index[a], index[b]) for a, b in self.edges]
        )

    def to_json(self) -> dict:
        return {
            "layers": [
                [[i + 1, j] for j in range(len(layer))]
                for i, layer in enumerate(self.layer_cells)
            ],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["graph layered {"]
        for i, layer in enumerate(self.layer_cells):
            ids = " ".join(f'"{i + 1}.{j}"' for j in range(len(layer)))
            lines.append(f"  {{ rank=same {ids} }}")
        for (i, j), (i2, j2) in self.edges:
            lines.append(f'  "{i}.{j}" -- "{i2}.{j2}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_layered_graph(p: Partition) -> LayeredGraph:
    """The side-sharing graph on Ferrers cells, layered by diagonal.

    >>> g = build_layered_graph(staircase(3))
    >>> g.layer_sizes(), g.edge_count
    ((3, 2, 1), 6)
    """
    if not is_staircase(p):
        raise DomainError(f"{p.parts} is not a staircase")
    ell = p.length
    layers = []
    for i in range(1, ell + 1):
        d = ell - i
        layers.append(tuple((d - b, b) for b in range(d + 1)))
    cell_to_id: dict[tuple[int, int], VertexId] = {}
    for i, layer in enumerate(layers):
        for j, cell in enumerate(layer):
            cell_to_id[cell] = (i + 1, j)
    edges = []
    for cell, vid in sorted(cell_to_id.items()):
        a, b = cell
        # side-sharing neighbours one diagonal down; the other two
        # directions are the same pairs seen from the far end
        for nbr in ((a - 1, b), (a, b - 1)):
            nid = cell_to_id.get(nbr)
            if nid is not None:
                edges.append((nid, vid))
    return LayeredGraph(p, tuple(layers), tuple(sorted(edges)))


def is_isomorphic(
    g1: WordGraph | LayeredGraph | SimpleGraph,
    g2: WordGraph | LayeredGraph | SimpleGraph,
    cap: int = DEFAULT_ISO_CAP,
) -> bool:
    """Backtracking isomorphism test with degree pruning.

    Intended for the desk-scale graphs this package builds; refuses
    graphs above ``cap`` vertices.
    """
    a = g1 if isinstance(g1, SimpleGraph) else g1.as_simple()
    b = g2 if isinstance(g2, SimpleGraph) else g2.as_simple()
    if max(a.n, b.n) > cap:
        raise ResourceLimitError(
            f"isomorphism search capped at {cap} vertices, got {max(a.n, b.n)}"
        )
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    deg_a, deg_b = a.degrees(), b.degrees()
    if sorted(deg_a) != sorted(deg_b):
        return False
    adj_a, adj_b = a.adjacency(), b.adjacency()
    # refine candidate sets by degree and neighbour-degree multiset
    sig_a = [tuple(sorted(deg_a[w] for w in adj_a[v])) for v in range(a.n)]
    sig_b = [tuple(sorted(deg_b[w] for w in adj_b[v])) for v in range(b.n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    candidates = [
        [u for u in range(b.n) if deg_b[u] == deg_a[v] and sig_b[u] == sig_a[v]]
        for v in range(a.n)
    ]
    # match most-constrained vertices first
    order = sorted(range(a.n), key=lambda v: (len(candidates[v]), -deg_a[v]))
    image: list[int | None] = [None] * a.n
    used = [False] * b.n

    def extend(k: int) -> bool:
        if k == a.n:
            return True
        v = order[k]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in adj_a[v]:
                iw = image[w]
                if iw is not None and iw not in adj_b[u]:
                    ok = False
                    break
            if ok:
                for w in range(a.n):
                    iw = image[w]
                    if iw is not None and w not in adj_a[v] and iw in adj_b[u]:
                        ok = False
                        break
            if not ok:
                continue
            image[v] = u
            used[u] = True
            if extend(k + 1):
                return True
            image[v] = None
            used[u] = False
        return False

    return extend(0)


def missing_edge_polynomial(ell: int) -> IntPolynomial:
    """Sum over layers of (layer size) * e^(layer index - 1).

    Layer k contributes l+1-k vertices at exponent l-k, so the
    coefficients read 1, 2, ..., l from the constant term up.

    >>> missing_edge_polynomial(6).format("e")
    '6e^5 + 5e^4 + 4e^3 + 3e^2 + 2e + 1'
    """
    if ell < 1:
        raise DomainError(f"need a positive length, got {ell}")
    return IntPolynomial(range(1, ell + 1))


def family_series_report(nz: int, ne: int) -> Report:
    """Truncations of z/((1-e)(1-ez)^2) against the per-length polynomials.

    The closed form's e-expansion is an infinite tail at every z-degree,
    so coefficient-wise agreement with sum_{l>=2} P_l(e) z^l cannot hold
    beyond the main diagonal; this report tabulates both sides and marks
    each coefficient, asserting nothing.
    """
    if nz < 1 or ne < 0:
        raise DomainError("need nz >= 1 and ne >= 0")
    # closed form: z * (sum_q e^q) * (sum_j (j+1) e^j z^j), truncated
    closed: dict[tuple[int, int], int] = {}
    for j in range(min(nz, ne) + 1):
        if j + 1 > nz:
            continue
        for q in range(j, ne + 1):
            closed[(j + 1, q)] = closed.get((j + 1, q), 0) + (j + 1)
    family: dict[tuple[int, int], int] = {}
    for ell in range(2, nz + 1):
        for q, coeff in enumerate(missing_edge_polynomial(ell).coeffs):
            if q <= ne:
                family[(ell, q)] = coeff

    rep = Report(f"family generating function truncated at z^{nz}, e^{ne}")
    for m in range(1, nz + 1):
        for q in range(ne + 1):
            lhs = closed.get((m, q), 0)
            rhs = family.get((m, q), 0)
            rep.add(check(f"coefficient of z^{m} e^{q}", lhs, rhs))
    rep.note(
        "closed form carries coefficient m for every e-degree >= m-1, the "
        "polynomial side starts at z^2 and stops at e-degree m-1; only the "
        "diagonal from z^2 on can agree"
    )
    return rep


def is_subgraph_order(p1: Partition, p2: Partition) -> bool:
    """Proper containment of staircase graphs, verified on the cells.

    >>> is_subgraph_order(staircase(3), staircase(4))
    True
    >>> is_subgraph_order(staircase(3), staircase(3))
    False
    """
    if not is_staircase(p1) or not is_staircase(p2):
        raise DomainError("both arguments must be staircases")
    if p1.length >= p2.length:
        return False
    g1, g2 = build_layered_graph(p1), build_layered_graph(p2)
    cells2 = set()
    for layer in g2.layer_cells:
        cells2.update(layer)
    for layer in g1.layer_cells:
        if not set(layer) <= cells2:
            return False
    edges2 = {
        frozenset((g2.cell_of(a), g2.cell_of(b))) for a, b in g2.edges
    }
    return all(
        frozenset((g1.cell_of(a), g1.cell_of(b))) in edges2 for a, b in g1.edges
    )


def parity_pair_report(p1: Partition, p2: Partition) -> Report:
    """Three equivalent parity predicates for consecutive staircases.

    (i) the two sizes share parity, (ii) the first length is odd,
    (iii) the distinct-odd-parts partitions share length.  The claimed
    equivalence is that all three agree.
    """
    if not is_staircase(p1) or not is_staircase(p2):
        raise DomainError("both arguments must be staircases")
    if p2.length != p1.length + 1:
        raise DomainError(
            f"need consecutive staircases, got lengths {p1.length}, {p2.length}"
        )
    same_parity = p1.size % 2 == p2.size % 2
    first_odd = p1.length % 2 == 1
    equal_dop = len(distinct_odd_parts(p1).parts) == len(distinct_odd_parts(p2).parts)
    rep = Report(f"parity pair at lengths {p1.length}, {p2.length}")
    rep.add(check("sizes share parity", same_parity, first_odd,
                  kind=INVARIANT, note="claimed equivalent to first length odd"))
    rep.add(check("distinct-odd-parts lengths equal", equal_dop, first_odd,
                  kind=INVARIANT, note="claimed equivalent to first length odd"))
    rep.add(check("all three predicates agree",
                  same_parity == first_odd == equal_dop, True, kind=INVARIANT))
    return rep


def is_parity_pair(p1: Partition, p2: Partition) -> bool:
    """True when the consecutive staircases' sizes share parity."""
    if not is_staircase(p1) or not is_staircase(p2):
        raise DomainError("both arguments must be staircases")
    return p1.size % 2 == p2.size % 2


def vertex_parity_report(ell: int) -> Report:
    """Audit the claimed size parity of the pair starting at odd ell.

    The claim under audit: both sizes even when ell = 1 mod 4, both odd
    when ell = 3 mod 4.  Observed parity is reported next to it.
    """
    if ell % 2 == 0:
        raise DomainError(f"the parity classes are claimed for odd lengths, got {ell}")
    size1, size2 = staircase(ell).size, staircase(ell + 1).size
    observed = "even-vertices" if size1 % 2 == 0 else "odd-vertices"
    claimed = "even-vertices" if ell % 4 == 1 else "odd-vertices"
    rep = Report(f"vertex-count parity class at ell = {ell}")
    rep.add(check("sizes share parity", size1 % 2 == size2 % 2, True, kind=INVARIANT))
    rep.add(check("parity class", observed, claimed,
                  note=f"sizes {size1}, {size2}"))
    return rep


@dataclass(frozen=True)
class BalanceMatrix:
    """The 2x2 matrix [[k^2, k^2+k], [k^2-k, k^2]] attached to balance k."""

    k: int

    @property
    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        k = self.k
        return ((k * k, k * k + k), (k * k - k, k * k))

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def column_sums(self) -> tuple[int, int]:
        (a, b), (c, d) = self.entries
        return (a + c, b + d)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "entries": [list(r) for r in self.entries],
            "determinant": self.determinant,
            "column_sums": list(self.column_sums()),
        }


def balance_matrix(k: int) -> BalanceMatrix:
    """The matrix correspondence for the shared-balance pair at k.

    >>> balance_matrix(3).entries
    ((9, 12), (6, 9))
    """
    if k < 1:
        raise DomainError(f"balance parameter must be positive, got {k}")
    return BalanceMatrix(k)


def balance_matrix_report(k: int) -> Report:
    m = balance_matrix(k)
    rep = Report(f"balance matrix at k = {k}")
    rep.add(check("determinant", m.determinant, k * k, kind=INVARIANT))
    rep.add(
        check(
            "column sums",
            m.column_sums(),
            (staircase(2 * k - 1).size, staircase(2 * k).size),
            kind=INVARIANT,
            note="sizes of the shared-balance staircase pair",
        )
    )
    return rep
