"""Binomial ideals, a Buchberger engine for them, and Hilbert data.

The Groebner computation never leaves pure differences: S-pairs of
binomials are binomials and reduction is monomial rewriting, so
coefficients stay +1/-1 throughout.  Dimension and degree come from
the Hilbert series of the initial ideal via the pivot-variable
recursion, cross-checkable against direct standard-monomial counts.
Dimension always means the affine Krull dimension of the quotient.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .binomial import (
    Binomial,
    Expo,
    divides,
    expo_lcm,
    grevlex_greater,
    normal_form,
    reduce_monomial,
    s_binomial,
)
from .chroma import colour_separation
from .errors import DomainError, ResourceLimitError
from .identities import PartitionIdentity, graver_basis, parity_split
from .partition import Partition, is_staircase, staircase
from .poly import IntPolynomial
from .report import INVARIANT, Report, check

MAX_BASIS = 256
MAX_HILBERT_VARS = 16
MAX_HILBERT_GENS = 64


@dataclass(frozen=True)
class BinomialIdeal:
    """A list of binomial generators, optionally with variable weights."""

    nvars: int
    generators: tuple[Binomial, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.nvars != self.nvars:
                raise DomainError(
                    f"generator on {g.nvars} variables in a {self.nvars}-variable ideal"
                )
        if self.weights is not None and len(self.weights) != self.nvars:
            raise DomainError(
                f"{len(self.weights)} weights for {self.nvars} variables"
            )

    def to_json(self) -> dict:
        out: dict = {
            "nvars": self.nvars,
            "generators": [g.to_json() for g in self.generators],
        }
        if self.weights is not None:
            out["weights"] = list(self.weights)
        return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators, kept as an antichain under division."""

    nvars: int
    gens: tuple[Expo, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g) != self.nvars:
                raise DomainError(
                    f"monomial on {len(g)} variables in a {self.nvars}-variable ideal"
                )
        object.__setattr__(self, "gens", _minimalize(self.gens))

    def contains_monomial(self, m: Expo) -> bool:
        return any(divides(g, m) for g in self.gens)

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "gens": [list(g) for g in self.gens]}


def _minimalize(gens) -> tuple[Expo, ...]:
    uniq = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    out: list[Expo] = []
    for g in uniq:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def groebner_basis(
    gens,
    greater=grevlex_greater,
    max_basis: int = MAX_BASIS,
) -> tuple[Binomial, ...]:
    """Reduced Groebner basis of a binomial list, canonically sorted.

    Pairs are processed smallest lcm first; the coprime-lead criterion
    prunes.  The result is auto-reduced (minimal leads, irreducible
    tails) so it is unique for the order, independent of input order.
    """
    gen_list = list(gens)
    if not gen_list:
        raise DomainError("need at least one generator")
    nvars = gen_list[0].nvars
    basis: list[Binomial] = []
    for g in gen_list:
        if g.nvars != nvars:
            raise DomainError("generators on different variable counts")
        og = g.oriented(greater)
        if all(not og.same_up_to_sign(h) for h in basis):
            basis.append(og)

    queue: list[tuple[int, Expo, int, int]] = []
    for i, j in ((i, j) for j in range(len(basis)) for i in range(j)):
        lcm = expo_lcm(basis[i].u, basis[j].u)
        heapq.heappush(queue, (sum(lcm), lcm, i, j))

    while queue:
        _, lcm, i, j = heapq.heappop(queue)
        f, g = basis[i], basis[j]
        if all(not (x and y) for x, y in zip(f.u, g.u)):
            continue  # coprime leads: S-pair reduces to zero
        s = s_binomial(f, g)
        if s is None:
            continue
        h = normal_form(s, basis, greater)
        if h is None:
            continue
        h = h.oriented(greater)
        basis.append(h)
        if len(basis) > max_basis:
            raise ResourceLimitError(
                f"basis grew past {max_basis} elements"
            )
        k = len(basis) - 1
        for i2 in range(k):
            lcm2 = expo_lcm(basis[i2].u, h.u)
            heapq.heappush(queue, (sum(lcm2), lcm2, i2, k))

    return _autoreduce(basis, greater)


def _autoreduce(basis: list[Binomial], greater) -> tuple[Binomial, ...]:
    ordered = sorted(basis, key=lambda g: (sum(g.u), g.u, g.v))
    minimal: list[Binomial] = []
    for g in ordered:
        if not any(divides(h.u, g.u) for h in minimal):
            minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1 :]
            tail = reduce_monomial(g.v, others, greater)
            if tail != g.v:
                minimal[i] = Binomial(g.u, tail)
                changed = True
    return tuple(sorted(minimal, key=lambda g: (sum(g.u), g.u, g.v)))


def initial_ideal(
    gb, nvars: int | None = None, greater=grevlex_greater
) -> MonomialIdeal:
    """Leading terms of a Groebner basis, minimalized."""
    elems = list(gb)
    if nvars is None:
        if not elems:
            raise DomainError("empty basis needs an explicit variable count")
        nvars = elems[0].nvars
    return MonomialIdeal(nvars, tuple(g.oriented(greater).u for g in elems))


@dataclass(frozen=True)
class HilbertData:
    """Series numerator over (1-t)^nvars, with dimension and degree."""

    numerator: IntPolynomial
    dimension: int
    degree: int

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "dimension": self.dimension,
            "degree": self.degree,
        }


def hilbert(mi: MonomialIdeal) -> HilbertData:
    """Hilbert data of the quotient by a monomial ideal.

    The numerator satisfies N(I) = N(I + (x)) + t*N(I : x) for any
    pivot variable x; dimension is the pole order of N/(1-t)^nvars at
    t = 1 and degree the reduced numerator there.  The zero ring (unit
    ideal) gets dimension -1.

    >>> hd = hilbert(MonomialIdeal(4, ((1, 0, 1, 0), (0, 1, 0, 1))))
    >>> hd.dimension, hd.degree
    (2, 4)
    """
    if mi.nvars > MAX_HILBERT_VARS:
        raise ResourceLimitError(
            f"Hilbert recursion limited to {MAX_HILBERT_VARS} variables"
        )
    if len(mi.gens) > MAX_HILBERT_GENS:
        raise ResourceLimitError(
            f"Hilbert recursion limited to {MAX_HILBERT_GENS} generators"
        )
    cache: dict[tuple[Expo, ...], IntPolynomial] = {}
    num = _hilbert_numerator(mi.gens, mi.nvars, cache)
    if num.is_zero():
        return HilbertData(num, -1, 0)
    reduced = num
    multiplicity = 0
    while reduced(1) == 0:
        reduced = reduced.divide_by_one_minus_x()
        multiplicity += 1
    return HilbertData(num, mi.nvars - multiplicity, reduced(1))


def _hilbert_numerator(
    gens: tuple[Expo, ...], nvars: int, cache: dict
) -> IntPolynomial:
    if not gens:
        return IntPolynomial([1])
    if any(not any(g) for g in gens):
        return IntPolynomial()
    got = cache.get(gens)
    if got is not None:
        return got
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        # pairwise disjoint supports: a regular sequence
        out = IntPolynomial([1])
        for g in gens:
            out = out * IntPolynomial([1] + [0] * (sum(g) - 1) + [-1])
        cache[gens] = out
        return out
    pivot = counts.index(max(counts))
    unit = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = _minimalize(gens + (unit,))
    colon = _minimalize(
        tuple(
            g[:pivot] + (max(g[pivot] - 1, 0),) + g[pivot + 1 :] for g in gens
        )
    )
    out = _hilbert_numerator(plus, nvars, cache) + _hilbert_numerator(
        colon, nvars, cache
    ).shift(1)
    cache[gens] = out
    return out


def hilbert_function_prefix(hd: HilbertData, nvars: int, upto: int) -> tuple[int, ...]:
    """Graded dimensions in degrees 0..upto, from the series numerator."""
    return hd.numerator.series_prefix(nvars, upto)


def standard_monomial_counts(mi: MonomialIdeal, upto: int) -> tuple[int, ...]:
    """Direct count of monomials outside the ideal, degree by degree.

    Independent of the numerator recursion; used as its oracle.
    """
    out = []
    for d in range(upto + 1):
        count = 0
        for combo in combinations_with_replacement(range(mi.nvars), d):
            e = [0] * mi.nvars
            for i in combo:
                e[i] += 1
            if not mi.contains_monomial(tuple(e)):
                count += 1
        out.append(count)
    return tuple(out)


def identity_binomial(ident: PartitionIdentity, weights) -> Binomial:
    """The relation x-multiset = y-multiset as a binomial over weights."""
    ws = tuple(weights)
    index = {w: i for i, w in enumerate(ws)}
    if len(index) != len(ws):
        raise DomainError("weights must be distinct")
    u = [0] * len(ws)
    v = [0] * len(ws)
    for part in ident.lhs:
        if part not in index:
            raise DomainError(f"part {part} is not a weight")
        u[index[part]] += 1
    for part in ident.rhs:
        if part not in index:
            raise DomainError(f"part {part} is not a weight")
        v[index[part]] += 1
    return Binomial(tuple(u), tuple(v))


def separation_ideal(p: Partition) -> BinomialIdeal:
    """The two parity-split relations over weights (1..l, mu, kappa)."""
    if not is_staircase(p):
        raise DomainError(f"{p.parts} is not a staircase")
    if p.length < 5:
        raise DomainError(f"separation ideal needs length >= 5, got {p.length}")
    sep = colour_separation(p)
    weights = tuple(range(1, p.length + 1)) + (sep.mu, sep.kappa)
    gens = tuple(identity_binomial(s, weights) for s in parity_split(p))
    return BinomialIdeal(len(weights), gens, weights)


def _weight_names(weights) -> list[str]:
    return [f"x{w}" for w in weights]


def audit_separation_ideal(ell: int) -> Report:
    """Audit of the two-generator separation ideal at one length.

    Computes the Groebner basis, Hilbert dimension and degree of the
    ideal the two parity-split generators generate, compares with the
    claimed dimension l and degree ceil(l/2)*floor(l/2), and probes
    whether other small weight relations already lie in that ideal.
    """
    if not 5 <= ell <= 10:
        raise DomainError(f"audit covers lengths 5..10, got {ell}")
    ideal = separation_ideal(staircase(ell))
    assert ideal.weights is not None
    names = _weight_names(ideal.weights)
    rep = Report(f"separation ideal audit at length {ell}")
    rep.note(
        "dimension and degree are affine: Krull dimension of the full "
        "quotient ring and reduced Hilbert numerator at 1"
    )
    rep.note(
        "two readings are probed: the ideal generated by the two "
        "relations (dimension/degree rows) and the full kernel of the "
        "weight map (probe rows)"
    )
    for g in ideal.generators:
        rep.add(
            check(
                f"generator {g.format(names)} vanishes under the weight map",
                g.in_kernel(ideal.weights),
                True,
                kind=INVARIANT,
            )
        )
    gb = groebner_basis(ideal.generators)
    rep.add(
        check(
            "basis elements stay in the weight kernel",
            all(g.in_kernel(ideal.weights) for g in gb),
            True,
            kind=INVARIANT,
            note=f"basis size {len(gb)}",
        )
    )
    mi = initial_ideal(gb, ideal.nvars)
    hd = hilbert(mi)
    rep.add(check("dimension", hd.dimension, ell))
    rep.add(check("degree", hd.degree, (ell + 1) // 2 * (ell // 2)))
    rep.add(
        check(
            "series prefix equals direct monomial count through degree 8",
            hilbert_function_prefix(hd, ideal.nvars, 8),
            standard_monomial_counts(mi, 8),
            kind=INVARIANT,
        )
    )
    for probe in graver_basis(ideal.weights, 2):
        if any(probe.same_up_to_sign(g) for g in ideal.generators):
            continue
        nf = normal_form(probe.oriented(), gb)
        rep.add(
            check(
                f"kernel probe {probe.format(names)} reduces to zero",
                nf is None,
                True,
                note=(
                    "normal form 0"
                    if nf is None
                    else f"normal form {nf.format(names)}"
                ),
            )
        )
    return rep


def consecutive_quadric_ideal(ell: int) -> BinomialIdeal:
    """x_(j-1) x_(j+1) - x_j^2 for j = 1..l-1, weights 0..l.

    >>> [g.format() for g in consecutive_quadric_ideal(3).generators]
    ['x0*x2 - x1^2', 'x1*x3 - x2^2']
    """
    if ell < 2:
        raise DomainError(f"need length >= 2, got {ell}")
    n = ell + 1
    gens = []
    for j in range(1, ell):
        u = [0] * n
        v = [0] * n
        u[j - 1] += 1
        u[j + 1] += 1
        v[j] = 2
        gens.append(Binomial(tuple(u), tuple(v)))
    return BinomialIdeal(n, tuple(gens), tuple(range(n)))


def audit_quadric_chain_ideal(ell: int) -> Report:
    """Audit of the consecutive-quadric ideal at one length."""
    if not 2 <= ell <= 8:
        raise DomainError(f"audit covers lengths 2..8, got {ell}")
    ideal = consecutive_quadric_ideal(ell)
    assert ideal.weights is not None
    rep = Report(f"consecutive-quadric ideal audit at length {ell}")
    rep.note(
        "dimension is the affine Krull dimension of the quotient; the "
        "projective dimension is one less"
    )
    rep.add(check("generator count", len(ideal.generators), ell - 1,
                  kind=INVARIANT))
    rep.add(
        check(
            "generators vanish under x_i -> t^i",
            all(g.in_kernel(ideal.weights) for g in ideal.generators),
            True,
            kind=INVARIANT,
        )
    )
    gb = groebner_basis(ideal.generators)
    mi = initial_ideal(gb, ideal.nvars)
    hd = hilbert(mi)
    rep.add(check("dimension", hd.dimension, 2))
    rep.add(check("degree", hd.degree, 2 ** (ell - 1)))
    rep.add(
        check(
            "series prefix equals direct monomial count through degree 8",
            hilbert_function_prefix(hd, ideal.nvars, 8),
            standard_monomial_counts(mi, 8),
            kind=INVARIANT,
        )
    )
    return rep


@dataclass(frozen=True)
class WeightChain:
    """Two-row weighted node chain: top row l..1, bottom row l-1..0.

    Each bottom node points up to the top node of its column and the
    top row is a directed path left to right; the weight-0 node keeps
    the last column stable.
    """

    ell: int

    @property
    def top_weights(self) -> tuple[int, ...]:
        return tuple(range(self.ell, 0, -1))

    @property
    def bottom_weights(self) -> tuple[int, ...]:
        return tuple(range(self.ell - 1, -1, -1))

    def edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for c in range(self.ell):
            out.append((f"b{c}", f"t{c}"))
        for c in range(self.ell - 1):
            out.append((f"t{c}", f"t{c + 1}"))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "top": list(self.top_weights),
            "bottom": list(self.bottom_weights),
            "edges": [list(e) for e in self.edges()],
        }

    def to_dot(self) -> str:
        lines = ["digraph weight_chain {", "  rankdir=LR;"]
        tops = " ".join(f"t{c}" for c in range(self.ell))
        bottoms = " ".join(f"b{c}" for c in range(self.ell))
        lines.append(f"  {{ rank=same {tops} }}")
        lines.append(f"  {{ rank=same {bottoms} }}")
        for c, w in enumerate(self.top_weights):
            lines.append(f'  t{c} [label="{w}"];')
        for c, w in enumerate(self.bottom_weights):
            lines.append(f'  b{c} [label="{w}"];')
        for a, b in self.edges():
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def weight_chain_diagram(p: Partition) -> WeightChain:
    """The weighted chain whose node weights index the quadric ideal."""
    if not is_staircase(p):
        raise DomainError(f"{p.parts} is not a staircase")
    if p.length < 2:
        raise DomainError(f"need length >= 2, got {p.length}")
    return WeightChain(p.length)
