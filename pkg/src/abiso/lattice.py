"""Complete subgroup lattices by two independent backends.

The reference backend closes the set of cyclic subgroups under pairwise
join; the second enumerates subgroups of a two-factor product through
Goursat quintuples (a section of each factor plus an isomorphism between
them).  Both produce canonically sorted, deduplicated lattices, so set
equality between backends is a meaningful cross-check.

Internally elements are ranked into 0..n-1 (rank order equals tuple order)
and subgroups are frozensets of ranks; the dense tables are cached per
group because the verification suites revisit the same lattices often.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterator

from .groups import (
    AbelianGroup,
    BoundExceededError,
    Element,
    Subgroup,
    _factor,
    make_group,
)

DEFAULT_LATTICE_BOUND = 64
PURE_3_LATTICE_BOUND = 81

# Dense tables are refused above this order no matter what bound the caller
# passes; join-closure on larger groups would need a sparser representation.
HARD_LATTICE_CAP = 1024


def default_lattice_bound(G: AbelianGroup) -> int:
    """Default full-lattice order bound: 81 for pure 3-groups, else 64."""
    return PURE_3_LATTICE_BOUND if G.primes == (3,) else DEFAULT_LATTICE_BOUND


@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups of a group, canonically sorted (order, element list)."""

    parent: AbelianGroup
    subgroups: tuple[Subgroup, ...]
    backend: str

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.subgroups)


class _DenseGroup:
    """Rank-indexed view of a group with lazily cached translation rows."""

    def __init__(self, G: AbelianGroup):
        if G.order > HARD_LATTICE_CAP:
            raise BoundExceededError(
                f"group of order {G.order} exceeds dense-table cap {HARD_LATTICE_CAP}"
            )
        self.G = G
        self.elements: list[Element] = list(G.elements())
        self.rank = {x: i for i, x in enumerate(self.elements)}
        qs = G.cyclic_orders
        tabs = [[q // math.gcd(r, q) for r in range(q)] for q in qs]
        self.order_of = [
            math.lcm(*(tab[r] for r, tab in zip(x, tabs))) if qs else 1
            for x in self.elements
        ]
        self._rows: dict[int, list[int]] = {}

    def row(self, t: int) -> list[int]:
        """Translation by element #t as a rank permutation."""
        row = self._rows.get(t)
        if row is None:
            xt = self.elements[t]
            qs = self.G.cyclic_orders
            rank = self.rank
            row = [
                rank[tuple((a + b) % q for a, b, q in zip(x, xt, qs))]
                for x in self.elements
            ]
            self._rows[t] = row
        return row

    def add(self, i: int, j: int) -> int:
        return self.row(j)[i]

    def multiples(self, g: int) -> list[int]:
        """Ranks of 0, g, 2g, ... up to the order of g."""
        out = [0]
        y = g
        while y != 0:
            out.append(y)
            y = self.add(y, g)
        return out

    def span_join(self, span: set[int] | frozenset[int], g: int) -> set[int]:
        """Join of a subgroup (as a rank set) with the cyclic group on g."""
        out = set(span)
        for t in self.multiples(g)[1:]:
            row = self.row(t)
            out.update(row[s] for s in span)
        return out


@lru_cache(maxsize=64)
def _dense(G: AbelianGroup) -> _DenseGroup:
    return _DenseGroup(G)


@lru_cache(maxsize=None)
def _cyclic_index_sets(G: AbelianGroup) -> tuple[tuple[int, frozenset[int]], ...]:
    """(generator rank, element ranks) per distinct cyclic subgroup."""
    d = _dense(G)
    seen: dict[frozenset[int], int] = {}
    for g in range(G.order):
        s = frozenset(d.multiples(g))
        if s not in seen:
            seen[s] = g
    return tuple((g, s) for s, g in sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))


@lru_cache(maxsize=None)
def _lattice_index_sets(G: AbelianGroup) -> tuple[frozenset[int], ...]:
    """Every subgroup as a rank set: join-closure of the cyclic subgroups."""
    d = _dense(G)
    cyclics = _cyclic_index_sets(G)
    seeds = [s for _, s in cyclics]
    gens = [g for g, s in cyclics if len(s) > 1]
    seen: set[frozenset[int]] = set(seeds)
    work = list(seeds)
    while work:
        S = work.pop()
        for g in gens:
            if g in S:
                continue
            T = frozenset(d.span_join(S, g))
            if T not in seen:
                seen.add(T)
                work.append(T)
    return tuple(sorted(seen, key=lambda s: (len(s), sorted(s))))


def _subgroup_from_ranks(G: AbelianGroup, d: _DenseGroup, ranks: frozenset[int]) -> Subgroup:
    elems = tuple(d.elements[i] for i in sorted(ranks))
    gens: list[int] = []
    span: set[int] = {0}
    for i in sorted(ranks, key=lambda i: (-d.order_of[i], i)):
        if len(span) == len(ranks):
            break
        if i in span:
            continue
        gens.append(i)
        span = d.span_join(span, i)
    return Subgroup(G, elems, tuple(d.elements[i] for i in gens))


def _check_lattice_bound(G: AbelianGroup, bound: int | None) -> None:
    eff = default_lattice_bound(G) if bound is None else bound
    if G.order > eff:
        raise BoundExceededError(
            f"group of order {G.order} exceeds full-lattice bound {eff}"
        )


def all_cyclic_subgroups(G: AbelianGroup, *, bound: int | None = None) -> list[Subgroup]:
    """Deduplicated cyclic subgroups, canonically sorted."""
    _check_lattice_bound(G, bound)
    d = _dense(G)
    return [_subgroup_from_ranks(G, d, s) for _, s in _cyclic_index_sets(G)]


def all_subgroups(G: AbelianGroup, *, bound: int | None = None) -> SubgroupLattice:
    """The full lattice via join-closure (reference backend)."""
    _check_lattice_bound(G, bound)
    return _join_closure_lattice(G)


@lru_cache(maxsize=None)
def _join_closure_lattice(G: AbelianGroup) -> SubgroupLattice:
    d = _dense(G)
    subs = tuple(_subgroup_from_ranks(G, d, s) for s in _lattice_index_sets(G))
    return SubgroupLattice(G, subs, "join-closure")


def subgroups_of_order(L: SubgroupLattice, n: int) -> list[Subgroup]:
    """Members of the lattice with a given order; n must divide |parent|."""
    if n <= 0 or L.parent.order % n:
        raise ValueError(f"{n} does not divide the parent order {L.parent.order}")
    return [H for H in L.subgroups if H.order == n]


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    """Smallest subgroup containing both (their sumset, since everything commutes)."""
    if H.parent != K.parent:
        raise ValueError("subgroups have different parents")
    return Subgroup.from_generators(H.parent, H.generators + K.generators)


# ---------------------------------------------------------------------------
# Goursat backend


def _product_embedding(G1: AbelianGroup, G2: AbelianGroup):
    """Canonical product group plus the coordinate permutation into it."""
    raw_orders = G1.cyclic_orders + G2.cyclic_orders
    Gp = make_group(raw_orders)
    keys = []
    for q in raw_orders:
        ((p, e),) = _factor(q).items()
        keys.append((p, e))
    perm = sorted(range(len(raw_orders)), key=lambda i: (keys[i], i))
    assert tuple(raw_orders[i] for i in perm) == Gp.cyclic_orders
    return Gp, perm


class _Section:
    """A quotient A/B of a factor group, materialized on coset representatives."""

    def __init__(self, d: _DenseGroup, A: frozenset[int], B: frozenset[int]):
        self.d = d
        slot_of: dict[int, int] = {}
        reps: list[int] = []
        cosets: list[list[int]] = []
        for a in sorted(A):
            if a in slot_of:
                continue
            coset = sorted(d.add(a, b) for b in B)
            slot = len(reps)
            reps.append(coset[0])
            cosets.append(coset)
            for c in coset:
                slot_of[c] = slot
        self.reps = reps
        self.cosets = cosets
        self._slot_of = slot_of
        self.size = len(reps)
        self.orders = [self._slot_order(i, B) for i in range(self.size)]
        self.invariants = self._invariant_factors()

    def _slot_order(self, slot: int, B: frozenset[int]) -> int:
        step = self.reps[slot]
        y = step
        m = 1
        while y not in B:
            y = self.d.add(y, step)
            m += 1
        return m

    def add(self, i: int, j: int) -> int:
        return self._slot_of[self.d.add(self.reps[i], self.reps[j])]

    def slot_multiples(self, slot: int) -> list[int]:
        out = [0]
        y = self.add(0, slot)
        while y != 0:
            out.append(y)
            y = self.add(y, slot)
        return out

    def span_join(self, span: set[int] | frozenset[int], slot: int) -> set[int]:
        out = set(span)
        for t in self.slot_multiples(slot)[1:]:
            out.update(self.add(s, t) for s in span)
        return out

    def _invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors d_1 >= d_2 >= ... from element-order statistics."""
        per_prime: list[list[int]] = []
        for p in _factor(self.size):
            counts = [1]
            j = 1
            while True:
                pj = p**j
                c = sum(1 for o in self.orders if pj % o == 0)
                if c == counts[-1]:
                    break
                counts.append(c)
                j += 1
            logs = []
            for c in counts:
                e = 0
                while p**e < c:
                    e += 1
                assert p**e == c, "torsion counts of an abelian section are p-powers"
                logs.append(e)
            at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
            exps: list[int] = []
            for i, m in enumerate(at_least, start=1):
                nxt = at_least[i] if i < len(at_least) else 0
                exps.extend([i] * (m - nxt))
            per_prime.append(sorted(exps, reverse=True))
        width = max((len(e) for e in per_prime), default=0)
        out = []
        for i in range(width):
            d = 1
            for p, exps in zip(_factor(self.size), per_prime):
                if i < len(exps):
                    d *= p ** exps[i]
            out.append(d)
        return tuple(out)

    def basis(self) -> list[int]:
        """Slots of orders matching the invariant factors that span the section."""
        ds = self.invariants
        prefix = [1]
        for v in ds:
            prefix.append(prefix[-1] * v)

        def search(chosen: list[int], span: set[int]) -> list[int] | None:
            i = len(chosen)
            if i == len(ds):
                return chosen
            for y in range(self.size):
                if self.orders[y] != ds[i]:
                    continue
                new_span = self.span_join(span, y)
                if len(new_span) == prefix[i + 1]:
                    found = search(chosen + [y], new_span)
                    if found is not None:
                        return found
            return None

        found = search([], {0})
        assert found is not None, "abelian section must admit a basis"
        return found

    def coordinates(self, basis: list[int]) -> dict[int, tuple[int, ...]]:
        """slot -> exponent tuple over the basis (a bijection)."""
        ds = self.invariants
        coords: dict[int, tuple[int, ...]] = {}
        mult_tables = [self.slot_multiples(b) for b in basis]
        for lam in _cartesian(*(range(v) for v in ds)):
            slot = 0
            for li, table in zip(lam, mult_tables):
                slot = self.add(slot, table[li])
            coords[slot] = lam
        assert len(coords) == self.size
        return coords


def _section_isos(S: _Section, T: _Section) -> Iterator[list[int]]:
    """All isomorphisms S -> T as slot maps (empty if types differ)."""
    if S.invariants != T.invariants:
        return
    if S.size == 1:
        yield [0]
        return
    ds = S.invariants
    basis = S.basis()
    coords = S.coordinates(basis)
    cands = [[t for t in range(T.size) if T.orders[t] == d] for d in ds]
    prefix = [1]
    for v in ds:
        prefix.append(prefix[-1] * v)

    def assemble(images: list[int]) -> list[int]:
        tables = [T.slot_multiples(y) for y in images]
        phi = [0] * S.size
        for slot, lam in coords.items():
            t = 0
            for li, table in zip(lam, tables):
                t = T.add(t, table[li])
            phi[slot] = t
        return phi

    def rec(i: int, span: set[int], images: list[int]) -> Iterator[list[int]]:
        if i == len(ds):
            yield assemble(images)
            return
        for y in cands[i]:
            new_span = T.span_join(span, y)
            if len(new_span) == prefix[i + 1]:
                yield from rec(i + 1, new_span, images + [y])

    yield from rec(0, {0}, [])


def goursat_subgroups(
    G1: AbelianGroup, G2: AbelianGroup, *, bound: int | None = None
) -> SubgroupLattice:
    """Every subgroup of the product of two groups via Goursat quintuples.

    For each pair of sections (one per factor) of equal size and each
    isomorphism between them, the fiber product of the two projections is a
    subgroup; ranging over all quintuples yields the full lattice.
    """
    Gp, perm = _product_embedding(G1, G2)
    _check_lattice_bound(Gp, bound)
    dp = _dense(Gp)
    d1, d2 = _dense(G1), _dense(G2)
    width1 = len(G1.cyclic_orders)

    def embed_rank(a: int, c: int) -> int:
        raw = d1.elements[a] + d2.elements[c]
        return dp.rank[tuple(raw[i] for i in perm)]

    def sections_by_size(d: _DenseGroup, G: AbelianGroup):
        sets = _lattice_index_sets(G)
        by_size: dict[int, list[tuple[frozenset[int], frozenset[int]]]] = {}
        for A in sets:
            for B in sets:
                if len(A) % len(B) == 0 and B <= A:
                    by_size.setdefault(len(A) // len(B), []).append((A, B))
        return by_size

    sec1 = sections_by_size(d1, G1)
    sec2 = sections_by_size(d2, G2)

    found: set[frozenset[int]] = set()
    cache1: dict[tuple[frozenset[int], frozenset[int]], _Section] = {}
    cache2: dict[tuple[frozenset[int], frozenset[int]], _Section] = {}
    for size in sorted(set(sec1) & set(sec2)):
        for AB in sec1[size]:
            S = cache1.get(AB)
            if S is None:
                S = cache1[AB] = _Section(d1, *AB)
            for CD in sec2[size]:
                T = cache2.get(CD)
                if T is None:
                    T = cache2[CD] = _Section(d2, *CD)
                for phi in _section_isos(S, T):
                    ranks = set()
                    for i, members in enumerate(S.cosets):
                        images = T.cosets[phi[i]]
                        for a in members:
                            for c in images:
                                ranks.add(embed_rank(a, c))
                    found.add(frozenset(ranks))

    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    subs = tuple(_subgroup_from_ranks(Gp, dp, s) for s in ordered)
    return SubgroupLattice(Gp, subs, "goursat")
