"""Finite abelian groups in canonical primary decomposition.

A group is an immutable value: a tuple of prime components, primes strictly
ascending, each component carrying an ascending exponent list.  Elements are
residue tuples over the flattened cyclic components; subgroups store their
full (sorted) element set, which makes membership, intersection and the
isolation checks exact at desk scale.  All arithmetic is plain Python int,
so nothing ever wraps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian
from typing import Iterable, Iterator

Element = tuple[int, ...]

# Default ceiling for operations that enumerate every group element.
DEFAULT_ENUM_BOUND = 1024

# Orders above this are refused by make_group before trial division starts.
MAX_CYCLIC_ORDER = 2**40


class BoundExceededError(Exception):
    """An operation was asked to enumerate past its configured bound."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _factor(n: int) -> dict[int, int]:
    """Prime factorization by trial division; n must be >= 1."""
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True, order=True)
class PPartition:
    """Type of a finite abelian p-group: a prime and ascending exponents.

    ``exponents`` may be empty, which names the trivial factor; groups
    produced by :func:`make_group` only ever carry nonempty components.
    """

    p: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        exps = tuple(int(a) for a in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if any(a < 1 for a in exps):
            raise ValueError(f"exponents must be >= 1, got {exps}")
        if list(exps) != sorted(exps):
            raise ValueError(f"exponents must be ascending, got {exps}")

    @property
    def k(self) -> int:
        """Number of cyclic factors."""
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)

    @property
    def cyclic_orders(self) -> tuple[int, ...]:
        return tuple(self.p**a for a in self.exponents)


@dataclass(frozen=True)
class AbelianGroup:
    """Canonical form of a finite abelian group.

    Components are sorted by prime; the trivial group is the empty tuple.
    Equal values are isomorphic groups in identical coordinates, so element
    tuples of equal groups are directly comparable.
    """

    components: tuple[PPartition, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        primes = [c.p for c in comps]
        if primes != sorted(set(primes)):
            raise ValueError(f"component primes must be distinct ascending, got {primes}")
        if any(c.k == 0 for c in comps):
            raise ValueError("empty components are not stored; use an empty component list")

    @cached_property
    def order(self) -> int:
        return math.prod(c.order for c in self.components)

    @cached_property
    def cyclic_orders(self) -> tuple[int, ...]:
        """Flattened prime-power orders, primes then exponents ascending."""
        out: list[int] = []
        for c in self.components:
            out.extend(c.cyclic_orders)
        return tuple(out)

    @cached_property
    def identity(self) -> Element:
        return (0,) * len(self.cyclic_orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.components else 1

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(c.p for c in self.components)

    @property
    def is_trivial(self) -> bool:
        return not self.components

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic residue order."""
        return _cartesian(*(range(q) for q in self.cyclic_orders))

    def component_span(self, p: int) -> slice:
        """Residue positions belonging to the p-component (empty if p absent)."""
        start = 0
        for c in self.components:
            width = c.k
            if c.p == p:
                return slice(start, start + width)
            start += width
        return slice(start, start)

    def __str__(self) -> str:
        if not self.components:
            return "trivial"
        return " x ".join(f"C{q}" for q in self.cyclic_orders)


def make_group(cyclic_orders: Iterable[int]) -> AbelianGroup:
    """Canonical group for a direct product of cyclic groups.

    Each order is split into prime powers, regrouped by prime, exponents
    sorted ascending; permuting the input yields the identical value.
    """
    by_prime: dict[int, list[int]] = {}
    for q in cyclic_orders:
        q = int(q)
        if q <= 1:
            raise ValueError(f"cyclic order must be >= 2, got {q}")
        if q > MAX_CYCLIC_ORDER:
            raise BoundExceededError(f"cyclic order {q} exceeds limit {MAX_CYCLIC_ORDER}")
        for p, e in _factor(q).items():
            by_prime.setdefault(p, []).append(e)
    comps = tuple(
        PPartition(p, tuple(sorted(exps))) for p, exps in sorted(by_prime.items())
    )
    return AbelianGroup(comps)


def _check_element(G: AbelianGroup, x: Element) -> None:
    orders = G.cyclic_orders
    if len(x) != len(orders):
        raise ValueError(f"element {x} has {len(x)} residues, group expects {len(orders)}")
    for r, q in zip(x, orders):
        if not 0 <= r < q:
            raise ValueError(f"residue {r} out of range for component of order {q}")


def group_op(G: AbelianGroup, x: Element, y: Element) -> Element:
    """Componentwise sum modulo each cyclic order."""
    _check_element(G, x)
    _check_element(G, y)
    return tuple((a + b) % q for a, b, q in zip(x, y, G.cyclic_orders))


def group_neg(G: AbelianGroup, x: Element) -> Element:
    _check_element(G, x)
    return tuple((-a) % q for a, q in zip(x, G.cyclic_orders))


def scalar_mul(G: AbelianGroup, m: int, x: Element) -> Element:
    _check_element(G, x)
    return tuple((m * a) % q for a, q in zip(x, G.cyclic_orders))


def element_order(G: AbelianGroup, x: Element) -> int:
    """Least m >= 1 with m*x = identity."""
    _check_element(G, x)
    o = 1
    for r, q in zip(x, G.cyclic_orders):
        o = math.lcm(o, q // math.gcd(r, q))
    return o


def element_to_index(G: AbelianGroup, x: Element) -> int:
    """Mixed-radix rank of x; numeric order equals lexicographic order."""
    _check_element(G, x)
    idx = 0
    for r, q in zip(x, G.cyclic_orders):
        idx = idx * q + r
    return idx


def element_from_index(G: AbelianGroup, idx: int) -> Element:
    if not 0 <= idx < G.order:
        raise ValueError(f"index {idx} out of range for group of order {G.order}")
    out = []
    for q in reversed(G.cyclic_orders):
        out.append(idx % q)
        idx //= q
    return tuple(reversed(out))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup pinned to its parent group, with a full element list.

    ``elements`` is strictly ascending (tuple order) and must be closed;
    the classmethod constructors guarantee this, direct construction is for
    data that is already known to be a subgroup.
    """

    parent: AbelianGroup
    elements: tuple[Element, ...]
    generators: tuple[Element, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("a subgroup contains at least the identity")
        if self.elements[0] != self.parent.identity:
            raise ValueError("element list must start with the identity")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("element list must be strictly ascending")

    @cached_property
    def element_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __contains__(self, x: Element) -> bool:
        return x in self.element_set

    def __str__(self) -> str:
        gens = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.generators)
        return f"<{gens}>" if gens else "<1>"

    @classmethod
    def trivial(cls, parent: AbelianGroup) -> "Subgroup":
        return cls(parent, (parent.identity,), ())

    @classmethod
    def whole(cls, parent: AbelianGroup) -> "Subgroup":
        return cls.from_elements(parent, parent.elements())

    @classmethod
    def from_generators(cls, parent: AbelianGroup, generators: Iterable[Element]) -> "Subgroup":
        gens = tuple(tuple(g) for g in generators)
        span = {parent.identity}
        for g in gens:
            _check_element(parent, g)
            span = _span_with(parent, span, g)
        kept = tuple(g for g in gens if g != parent.identity)
        return cls(parent, tuple(sorted(span)), kept)

    @classmethod
    def from_elements(cls, parent: AbelianGroup, elements: Iterable[Element]) -> "Subgroup":
        """Build from a closed element set, deriving a short generator list.

        Raises ValueError if the set is not a subgroup.
        """
        elems = {tuple(x) for x in elements}
        for x in elems:
            _check_element(parent, x)
        if parent.identity not in elems:
            raise ValueError("element set lacks the identity")
        gens: list[Element] = []
        span = {parent.identity}
        # highest order first keeps generator lists short and deterministic
        for x in sorted(elems, key=lambda e: (-element_order(parent, e), e)):
            if x in span:
                continue
            gens.append(x)
            span = _span_with(parent, span, x)
            if not span <= elems:
                raise ValueError("element set is not closed under the group operation")
        if len(span) != len(elems):
            raise ValueError("element set is not closed under the group operation")
        return cls(parent, tuple(sorted(elems)), tuple(gens))


def _span_with(G: AbelianGroup, span: set[Element], g: Element) -> set[Element]:
    """Join of an existing span with the cyclic group on g."""
    out = set(span)
    step = g
    while step != G.identity:
        out |= {group_op(G, s, step) for s in span}
        step = group_op(G, step, g)
    return out


def cyclic_subgroup(G: AbelianGroup, x: Element) -> Subgroup:
    """The subgroup generated by a single element."""
    _check_element(G, x)
    elems = [G.identity]
    y = x
    while y != G.identity:
        elems.append(y)
        y = group_op(G, y, x)
    gens = (x,) if x != G.identity else ()
    return Subgroup(G, tuple(sorted(elems)), gens)


def relative_order(G: AbelianGroup, H: Subgroup, x: Element) -> int:
    """Least m >= 1 with m*x in H."""
    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    _check_element(G, x)
    y = x
    m = 1
    while y not in H:
        y = group_op(G, y, x)
        m += 1
    return m


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    """Intersection of two subgroups of the same parent."""
    if H.parent != K.parent:
        raise ValueError("subgroups have different parents")
    return Subgroup.from_elements(H.parent, H.element_set & K.element_set)


def omega1(G: AbelianGroup, p: int) -> Subgroup:
    """Elements killed by p: the p-socle (trivial when p does not divide |G|)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    per_comp: list[range | list[int]] = []
    gens: list[Element] = []
    orders = G.cyclic_orders
    for i, q in enumerate(orders):
        if q % p == 0:
            per_comp.append(range(0, q, q // p))
            g = [0] * len(orders)
            g[i] = q // p
            gens.append(tuple(g))
        else:
            per_comp.append([0])
    elems = tuple(sorted(_cartesian(*per_comp)))
    return Subgroup(G, elems, tuple(gens))


def subgroup_type(H: Subgroup) -> AbelianGroup:
    """Abstract isomorphism type of a subgroup.

    Recovered from element-order statistics: within the p-part, the count of
    elements killed by p^j is p to the sum of min(exponent, j), so the
    exponent multiset is the conjugate of the successive log differences.
    """
    ords = [element_order(H.parent, x) for x in H.elements]
    comps: list[PPartition] = []
    for c in H.parent.components:
        p = c.p
        counts = [1]  # elements killed by p^0
        j = 1
        while True:
            pj = p**j
            counts.append(sum(1 for o in ords if pj % o == 0))
            if counts[j] == counts[j - 1]:
                counts.pop()
                break
            j += 1
        logs = []
        for n in counts:
            e = 0
            while p**e < n:
                e += 1
            if p**e != n:
                raise ValueError("element set is not a subgroup: bad torsion count")
            logs.append(e)
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        exps: list[int] = []
        for j, m in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            exps.extend([j] * (m - nxt))
        if exps:
            comps.append(PPartition(p, tuple(sorted(exps))))
    G = AbelianGroup(tuple(comps))
    if G.order != H.order:
        raise ValueError("element set is not a subgroup: order mismatch")
    return G


def quotient_type(G: AbelianGroup, H: Subgroup) -> AbelianGroup:
    """Canonical type of G/H via the presentation matrix [diag(orders); generators]."""
    from .snf import smith_normal_form

    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    orders = G.cyclic_orders
    n = len(orders)
    rows = [[orders[i] if j == i else 0 for j in range(n)] for i in range(n)]
    rows.extend(list(g) for g in H.generators)
    diag = smith_normal_form(rows) if n else []
    if 0 in diag:
        raise ValueError("presentation matrix lost rank; generators are invalid")
    if math.prod(diag) * H.order != G.order:
        raise ValueError("generator matrix inconsistent with the subgroup's element set")
    return make_group([d for d in diag if d > 1])


def p_component(G: AbelianGroup, p: int) -> AbelianGroup:
    """The p-primary component of G as a standalone group (trivial if absent)."""
    for c in G.components:
        if c.p == p:
            return AbelianGroup((c,))
    return AbelianGroup(())


def p_part(H: Subgroup, p: int) -> Subgroup:
    """Projection of a subgroup onto the p-component, in that component's coordinates.

    The p-part of any element is an integer multiple of it, so the projected
    set is exactly H intersected with the p-component.
    """
    G = H.parent
    span = G.component_span(p)
    Gp = p_component(G, p)
    elems = {x[span] for x in H.elements}
    return Subgroup.from_elements(Gp, elems)
