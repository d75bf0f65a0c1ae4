"""Sum of element orders: brute-force, per-prime closed forms, and the
relative variant, all in exact integer arithmetic.

Values are plain ints; the closed forms evaluate a banded weight function
over the exponent partition of each prime component and multiply across
primes.
"""

from __future__ import annotations

import math

from .groups import (
    DEFAULT_ENUM_BOUND,
    AbelianGroup,
    BoundExceededError,
    PPartition,
    Subgroup,
    relative_order,
)

PsiValue = int


def psi_brute(G: AbelianGroup, *, bound: int = DEFAULT_ENUM_BOUND) -> PsiValue:
    """Sum of element orders by full enumeration (the reference oracle)."""
    if G.order > bound:
        raise BoundExceededError(f"group of order {G.order} exceeds enumeration bound {bound}")
    orders = G.cyclic_orders
    # per-component order lookup keeps the inner loop to gcd-free table hits
    tables = [[q // math.gcd(r, q) for r in range(q)] for q in orders]
    total = 0
    for x in G.elements():
        o = 1
        for r, tab in zip(x, tables):
            o = math.lcm(o, tab[r])
        total += o
    return total


def f_alpha(t: PPartition, alpha: int) -> int:
    """Banded weight used by the closed forms.

    On the band between consecutive exponents the value is
    p**((k-1-j)*alpha + sum of the first j exponents); adjacent band
    formulas agree at the shared boundary, so the band index
    j = #{i < k : exponent_i <= alpha} is well defined.
    """
    if t.k < 1:
        raise ValueError("partition must have at least one exponent")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    exps = t.exponents
    k = t.k
    j = sum(1 for a in exps[: k - 1] if a <= alpha)
    return t.p ** ((k - 1 - j) * alpha + sum(exps[:j]))


def psi_closed_p(t: PPartition) -> PsiValue:
    """Closed form for a p-group: telescoping sum over the banded weight."""
    if t.k < 1:
        raise ValueError("partition must have at least one exponent")
    p = t.p
    top = t.exponents[-1]
    return 1 + sum(
        p ** (2 * a) * f_alpha(t, a) - p ** (2 * a - 1) * f_alpha(t, a - 1)
        for a in range(1, top + 1)
    )


def psi_alt_p(t: PPartition) -> PsiValue:
    """Alternative closed form: leading power minus a (p-1)-weighted tail."""
    if t.k < 1:
        raise ValueError("partition must have at least one exponent")
    p = t.p
    top = t.exponents[-1]
    lead = p ** psi_degree(t)
    return lead - (p - 1) * sum(p ** (2 * a) * f_alpha(t, a) for a in range(top))


def psi_degree(t: PPartition) -> int:
    """Degree in p of the closed form: twice the top exponent plus the rest."""
    if t.k < 1:
        raise ValueError("partition must have at least one exponent")
    return 2 * t.exponents[-1] + sum(t.exponents[:-1])


def psi_closed(G: AbelianGroup) -> PsiValue:
    """Closed form for an arbitrary finite abelian group (multiplicative)."""
    return math.prod(psi_closed_p(c) for c in G.components)


def psi_relative(G: AbelianGroup, H: Subgroup, *, bound: int = DEFAULT_ENUM_BOUND) -> PsiValue:
    """Sum over all of G of the order relative to H (least m with m*x in H)."""
    if H.parent != G:
        raise ValueError("subgroup belongs to a different group")
    if G.order > bound:
        raise BoundExceededError(f"group of order {G.order} exceeds enumeration bound {bound}")
    return sum(relative_order(G, H, x) for x in G.elements())
