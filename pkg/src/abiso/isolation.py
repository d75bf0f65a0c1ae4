"""Deciding, enumerating and counting isolated subgroups.

A subgroup H is isolated when every group element either lies in H or
generates a cyclic subgroup meeting H only in the identity.  Three
independent deciders are provided:

* ``is_isolated_brute`` walks the definition and is the ground truth;
* ``is_isolated_psi`` compares exact sum-of-element-order values;
* ``is_isolated_structural`` uses the classification of isolated subgroups
  of abelian p-groups (socle-of-radical intersection) together with the
  cross-prime support condition that the definition forces on groups with
  several primes.

The verification suites compare all three on every subgroup of every group
in their sweeps, so none of the structure theory is taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian

from .groups import (
    DEFAULT_ENUM_BOUND,
    AbelianGroup,
    BoundExceededError,
    Element,
    PPartition,
    Subgroup,
    cyclic_subgroup,
    intersect,
    p_component,
    p_part,
    quotient_type,
    subgroup_type,
)
from .lattice import all_subgroups
from .psi import psi_closed


@dataclass(frozen=True)
class IsolationVerdict:
    """Outcome of an isolation test.

    Only the definitional method produces a witness: an x outside H whose
    cyclic subgroup meets H nontrivially.  The other two methods decide via
    aggregate criteria that have no single violating element.
    """

    isolated: bool
    method: str
    witness: Element | None = None

    def __bool__(self) -> bool:
        return self.isolated


@lru_cache(maxsize=64)
def _cyclic_element_sets(G: AbelianGroup) -> dict[Element, frozenset[Element]]:
    return {x: cyclic_subgroup(G, x).element_set for x in G.elements()}


def is_isolated_brute(
    G: AbelianGroup, H: Subgroup, *, bound: int = DEFAULT_ENUM_BOUND
) -> IsolationVerdict:
    """Definitional check; returns the first violating element if any."""
    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    if G.order > bound:
        raise BoundExceededError(f"group of order {G.order} exceeds enumeration bound {bound}")
    members = H.element_set
    for x, cyc in _cyclic_element_sets(G).items():
        if x in members:
            continue
        # both sets contain the identity, so nontrivial means size > 1
        if len(cyc & members) > 1:
            return IsolationVerdict(False, "definition", x)
    return IsolationVerdict(True, "definition")


def is_isolated_psi(G: AbelianGroup, H: Subgroup) -> IsolationVerdict:
    """Exact sum-of-orders criterion.

    H is isolated iff psi(G) - psi(H) = |H| * (psi(G/H) - 1); both sides are
    evaluated by closed form on the abstract types, so this decider never
    enumerates the group.
    """
    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    lhs = psi_closed(G) - psi_closed(subgroup_type(H))
    rhs = H.order * (psi_closed(quotient_type(G, H)) - 1)
    return IsolationVerdict(lhs == rhs, "psi-criterion")


@dataclass(frozen=True)
class SocleOfRadical:
    """Order-p elements that are p-th multiples, inside a p-group.

    This is a canonical, decomposition-free subgroup: with exponents
    a_1 <= ... <= a_k it is elementary abelian of rank #{i : a_i >= 2}.  A
    subgroup of the p-group is isolated exactly when it misses this socle
    (or is the whole group); its order-p subgroups are the forbidden lines.
    """

    subgroup: Subgroup

    @property
    def parent(self) -> AbelianGroup:
        return self.subgroup.parent

    def order_p_subgroups(self, p: int) -> list[Subgroup]:
        """The distinct lines of the socle: cyclic subgroups of order p."""
        seen: dict[frozenset[Element], Subgroup] = {}
        for x in self.subgroup.elements:
            if x == self.parent.identity:
                continue
            line = cyclic_subgroup(self.parent, x)
            seen.setdefault(line.element_set, line)
        return sorted(seen.values(), key=lambda s: s.elements)


def socle_of_radical(Gp: AbelianGroup, p: int) -> SocleOfRadical:
    """Socle of the p-th-multiples subgroup of a p-group.

    Built componentwise: a cyclic factor of order p**a contributes its unique
    order-p subgroup when a >= 2 and nothing otherwise, which agrees with
    filtering {p*x} for elements killed by p.
    """
    if Gp.components and (len(Gp.components) != 1 or Gp.components[0].p != p):
        raise ValueError(f"expected a {p}-group, got {Gp}")
    orders = Gp.cyclic_orders
    per_comp = [range(0, q, q // p) if q > p else [0] for q in orders]
    elems = tuple(sorted(_cartesian(*per_comp)))
    gens = []
    for i, q in enumerate(orders):
        if q > p:
            g = [0] * len(orders)
            g[i] = q // p
            gens.append(tuple(g))
    return SocleOfRadical(Subgroup(Gp, elems, tuple(gens)))


def is_isolated_structural(G: AbelianGroup, H: Subgroup) -> IsolationVerdict:
    """Structural decider: per-prime socle test plus cross-prime support rule.

    Within one prime, H_p is isolated in G_p iff it is everything or meets
    the socle of the radical trivially.  Across primes the definition only
    tolerates proper, nontrivial behaviour at a single prime: if H is proper
    at prime a while nontrivial at a different prime b, an element combining
    a coset-escaping a-part with an H-internal b-part violates isolation.
    On a p-group this reduces to the pure classification.
    """
    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    parts: list[tuple[int, AbelianGroup, Subgroup]] = []
    for comp in G.components:
        p = comp.p
        parts.append((p, p_component(G, p), p_part(H, p)))

    proper = [p for p, Gp, Hp in parts if Hp.order < Gp.order]
    nontrivial = [p for p, Gp, Hp in parts if Hp.order > 1]
    if any(a != b for a in proper for b in nontrivial):
        return IsolationVerdict(False, "structural")

    for p, Gp, Hp in parts:
        if Hp.order == Gp.order:
            continue
        socle = socle_of_radical(Gp, p).subgroup
        if not intersect(Hp, socle).is_trivial:
            return IsolationVerdict(False, "structural")
    return IsolationVerdict(True, "structural")


def enumerate_isolated(G: AbelianGroup, *, bound: int | None = None) -> list[Subgroup]:
    """Isolated subgroups from the full lattice, canonically sorted."""
    lattice = all_subgroups(G, bound=bound)
    return [H for H in lattice.subgroups if is_isolated_structural(G, H)]


def count_isolated(G: AbelianGroup, *, bound: int | None = None) -> int:
    return len(enumerate_isolated(G, bound=bound))


def count_isolated_order_p(t: PPartition) -> int:
    """Closed-form count of isolated order-p subgroups of a p-group.

    With r exponents equal to one, p**(k-r) * (p**r - 1) / (p - 1); the
    division is exact (it is a difference of two line counts).
    """
    if t.k < 1:
        raise ValueError("partition must have at least one exponent")
    r = sum(1 for a in t.exponents if a == 1)
    num = t.p ** (t.k - r) * (t.p**r - 1)
    assert num % (t.p - 1) == 0
    return num // (t.p - 1)
