"""Verification sweep suites.

Each suite runs one family of exact checks over a parameterized sweep of
groups (and usually every subgroup of each group) and returns a
deterministic report.  Sweeps are exhaustive within their bounds; nothing
is sampled, and every case records both sides of its comparison.
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian

from . import cache as cache_mod
from .groups import (
    AbelianGroup,
    BoundExceededError,
    PPartition,
    Subgroup,
    _factor,
    _is_prime,
    element_order,
    make_group,
    omega1,
    p_component,
    p_part,
    quotient_type,
)
from .isolation import (
    _cyclic_element_sets,
    count_isolated_order_p,
    is_isolated_brute,
    is_isolated_psi,
    is_isolated_structural,
)
from .lattice import all_subgroups, goursat_subgroups
from .literals import format_group_literal
from .psi import psi_alt_p, psi_brute, psi_closed, psi_closed_p, psi_relative
from .report import CaseResult, VerificationReport

# Sanity ceilings on user-supplied bounds; they keep sweeps minutes-scale
# and inside the dense-table cap of the lattice backends.
MAX_PSI_ORDER = 65536
MAX_LATTICE_ORDER = 1024
MAX_EXPONENT_SUM = 16

_SUITES: dict = {}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def _suite(name: str, **defaults):
    def register(fn):
        _SUITES[name] = (defaults, fn)
        return fn

    return register


# ---------------------------------------------------------------------------
# sweep families


@lru_cache(maxsize=None)
def partitions(n: int, min_part: int = 1) -> tuple[tuple[int, ...], ...]:
    """Ascending partitions of n."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min_part, n + 1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_sum: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for n in range(1, max_sum + 1):
        out.extend(partitions(n))
    return out


def p_group_types(p: int, max_order: int) -> list[PPartition]:
    out = []
    e = 1
    while p**e <= max_order:
        out.extend(PPartition(p, part) for part in partitions(e))
        e += 1
    return out


def abelian_types(max_order: int) -> list[AbelianGroup]:
    """Every isomorphism type of order <= max_order, sorted (order, literal)."""
    out = [make_group([])]
    for n in range(2, max_order + 1):
        choices = [
            [PPartition(p, part) for part in partitions(e)] for p, e in _factor(n).items()
        ]
        for combo in _cartesian(*choices):
            out.append(AbelianGroup(tuple(combo)))
    return sorted(out, key=lambda G: (G.order, format_group_literal(G)))


def _p_group_sweep(order_max: int, three_group_max: int) -> list[AbelianGroup]:
    """All p-group types within the per-prime bounds (3-groups get the larger one)."""
    groups = []
    p = 2
    while p <= max(order_max, three_group_max):
        if _is_prime(p):
            bound = three_group_max if p == 3 else order_max
            groups.extend(AbelianGroup((t,)) for t in p_group_types(p, bound))
        p += 1
    return sorted(groups, key=lambda G: (G.order, format_group_literal(G)))


def _mixed_sweep(order_max: int, three_group_max: int) -> list[AbelianGroup]:
    """Types of order <= order_max plus the pure 3-groups up to the larger bound."""
    groups = abelian_types(order_max)
    groups.extend(
        AbelianGroup((t,))
        for t in p_group_types(3, three_group_max)
        if t.order > order_max
    )
    return sorted(groups, key=lambda G: (G.order, format_group_literal(G)))


def _gens(H: Subgroup) -> list[list[int]]:
    return [list(g) for g in H.generators]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BoundExceededError(message)


# ---------------------------------------------------------------------------
# suites


@_suite("psi-equivalence", order_max=1024)
def _psi_equivalence(params, get_lattice):
    order_max = int(params["order_max"])
    _require(order_max <= MAX_PSI_ORDER, f"order_max above {MAX_PSI_ORDER}")
    cases = []
    for G in abelian_types(order_max):
        expected = psi_brute(G, bound=max(order_max, 1))
        actual = psi_closed(G)
        cases.append(CaseResult(format_group_literal(G), expected, actual, expected == actual))
    return cases


@_suite("psi-forms", max_exponent_sum=10, primes=(2, 3, 5, 7, 11, 101))
def _psi_forms(params, get_lattice):
    max_sum = int(params["max_exponent_sum"])
    _require(max_sum <= MAX_EXPONENT_SUM, f"max_exponent_sum above {MAX_EXPONENT_SUM}")
    primes = tuple(params["primes"])
    cases = []
    for part in partitions_up_to(max_sum):
        for p in primes:
            t = PPartition(p, part)
            expected = psi_closed_p(t)
            actual = psi_alt_p(t)
            literal = "x".join(str(p**a) for a in part)
            cases.append(CaseResult(literal, expected, actual, expected == actual))
    return cases


@_suite("isolation-equivalence", order_max=64, three_group_max=81)
def _isolation_equivalence(params, get_lattice):
    order_max = int(params["order_max"])
    three_max = int(params["three_group_max"])
    _require(max(order_max, three_max) <= MAX_LATTICE_ORDER, f"bounds above {MAX_LATTICE_ORDER}")
    cases = []
    for G in _mixed_sweep(order_max, three_max):
        literal = format_group_literal(G)
        for H in get_lattice(G, G.order):
            brute = is_isolated_brute(G, H).isolated
            by_psi = is_isolated_psi(G, H).isolated
            by_structure = is_isolated_structural(G, H).isolated
            gens = _gens(H)
            cases.append(
                CaseResult(literal, brute, by_psi, brute == by_psi, gens, "psi-vs-brute")
            )
            cases.append(
                CaseResult(
                    literal, brute, by_structure, brute == by_structure, gens,
                    "structural-vs-brute",
                )
            )
    return cases


@_suite("classification", order_max=64, three_group_max=81)
def _classification(params, get_lattice):
    """Isolated subgroups of a p-group are the group itself plus everything
    meeting the upper direct factor (exponents >= 2, canonical coordinates)
    trivially; compared against the definitional filter."""
    order_max = int(params["order_max"])
    three_max = int(params["three_group_max"])
    _require(max(order_max, three_max) <= MAX_LATTICE_ORDER, f"bounds above {MAX_LATTICE_ORDER}")
    cases = []
    for G in _p_group_sweep(order_max, three_max):
        literal = format_group_literal(G)
        lattice = get_lattice(G, G.order)
        brute_set = {H.elements for H in lattice if is_isolated_brute(G, H)}
        comp = G.components[0]
        gens = []
        orders = G.cyclic_orders
        for i, a in enumerate(comp.exponents):
            if a >= 2:
                g = [0] * len(orders)
                g[i] = 1
                gens.append(tuple(g))
        upper = Subgroup.from_generators(G, gens)
        predicted = {
            H.elements
            for H in lattice
            if H.order == G.order or len(H.element_set & upper.element_set) == 1
        }
        cases.append(
            CaseResult(literal, len(brute_set), len(predicted),
                       len(brute_set) == len(predicted), None, "count")
        )
        cases.append(
            CaseResult(literal, True, brute_set == predicted,
                       brute_set == predicted, None, "set")
        )
    return cases


@_suite(
    "example-2-6",
    family1_primes=(2, 3, 5),
    family1_exponents=(2, 3),
    family2_exponents=(2, 3),
    family3_exponents=(2, 3),
    include_p3_family2=False,
)
def _example_2_6(params, get_lattice):
    """Three computed families with closed-form isolated-subgroup counts."""
    cases = []

    def isolated_of(G):
        lattice = get_lattice(G, G.order)
        return [H for H in lattice if is_isolated_structural(G, H)]

    for p in params["family1_primes"]:
        for m in params["family1_exponents"]:
            G = make_group([p, p**m])
            found = len(isolated_of(G))
            cases.append(
                CaseResult(format_group_literal(G), p + 2, found,
                           found == p + 2, None, "rank2-count")
            )

    runs = [(2, m, n) for m in params["family2_exponents"]
            for n in params["family2_exponents"] if m <= n]
    if params["include_p3_family2"]:
        runs.append((3, 2, 2))
    for p, m, n in runs:
        G = make_group([p, p**m, p**n])
        found = len(isolated_of(G))
        cases.append(
            CaseResult(format_group_literal(G), p * p + 2, found,
                       found == p * p + 2, None, "rank3-one-unit-count")
        )

    for m in params["family3_exponents"]:
        p = 2
        G = make_group([p, p, p**m])
        iso = isolated_of(G)
        literal = format_group_literal(G)
        cases.append(
            CaseResult(literal, 2 * p * p + p + 2, len(iso),
                       len(iso) == 2 * p * p + p + 2, None, "rank3-two-units-count")
        )
        of_p = sum(1 for H in iso if H.order == p)
        of_p2 = sum(1 for H in iso if H.order == p * p)
        cases.append(CaseResult(literal, p * p + p, of_p, of_p == p * p + p, None, "order-p"))
        cases.append(CaseResult(literal, p * p, of_p2, of_p2 == p * p, None, "order-p^2"))
    return cases


@_suite("order-p-count", order_max=64, three_group_max=81)
def _order_p_count(params, get_lattice):
    order_max = int(params["order_max"])
    three_max = int(params["three_group_max"])
    _require(max(order_max, three_max) <= MAX_LATTICE_ORDER, f"bounds above {MAX_LATTICE_ORDER}")
    cases = []
    for G in _p_group_sweep(order_max, three_max):
        t = G.components[0]
        lattice = get_lattice(G, G.order)
        found = sum(
            1 for H in lattice if H.order == t.p and is_isolated_brute(G, H)
        )
        expected = count_isolated_order_p(t)
        cases.append(
            CaseResult(format_group_literal(G), expected, found, expected == found)
        )
    return cases


@_suite("lemma-2-1", order_max=144)
def _lemma_2_1(params, get_lattice):
    """Isolation on a coprime product versus per-prime brute isolation plus
    the cross-prime support rule (proper at one prime forbids nontrivial
    parts at any other)."""
    order_max = int(params["order_max"])
    _require(order_max <= MAX_LATTICE_ORDER, f"order_max above {MAX_LATTICE_ORDER}")
    pairs = []
    small_primes = [2, 3, 5, 7, 11]
    for i, p in enumerate(small_primes):
        for q in small_primes[i + 1:]:
            for t1 in p_group_types(p, order_max // q):
                for t2 in p_group_types(q, order_max // t1.order):
                    pairs.append(AbelianGroup((t1, t2)))
    pairs.sort(key=lambda G: (G.order, format_group_literal(G)))
    cases = []
    for G in pairs:
        literal = format_group_literal(G)
        comps = {c.p: p_component(G, c.p) for c in G.components}
        for H in get_lattice(G, G.order):
            brute = is_isolated_brute(G, H, bound=G.order).isolated
            parts = {p: p_part(H, p) for p in comps}
            componentwise = all(
                is_isolated_brute(Gp, parts[p], bound=Gp.order).isolated
                for p, Gp in comps.items()
            )
            support = not any(
                parts[a].order < comps[a].order and parts[b].order > 1
                for a in comps
                for b in comps
                if a != b
            )
            cases.append(
                CaseResult(literal, brute, componentwise and support,
                           brute == (componentwise and support), _gens(H), "product-law")
            )
    return cases


@_suite("lemma-2-3", order_max=64, three_group_max=81)
def _lemma_2_3(params, get_lattice):
    """p-groups whose exponents are all >= 2 have no proper isolated subgroup."""
    order_max = int(params["order_max"])
    three_max = int(params["three_group_max"])
    _require(max(order_max, three_max) <= MAX_LATTICE_ORDER, f"bounds above {MAX_LATTICE_ORDER}")
    cases = []
    for G in _p_group_sweep(order_max, three_max):
        if min(G.components[0].exponents) < 2:
            continue
        found = sum(1 for H in get_lattice(G, G.order) if is_isolated_brute(G, H))
        cases.append(CaseResult(format_group_literal(G), 2, found, found == 2))
    return cases


@_suite("omega1-containment", order_max=64, three_group_max=81)
def _omega1_containment(params, get_lattice):
    """Every isolated proper subgroup sits strictly inside the p-socle,
    checked per prime component."""
    order_max = int(params["order_max"])
    three_max = int(params["three_group_max"])
    _require(max(order_max, three_max) <= MAX_LATTICE_ORDER, f"bounds above {MAX_LATTICE_ORDER}")
    cases = []
    for G in _mixed_sweep(order_max, three_max):
        if G.is_trivial:
            continue
        literal = format_group_literal(G)
        socles = {
            c.p: omega1(p_component(G, c.p), c.p) for c in G.components
        }
        for H in get_lattice(G, G.order):
            if H.order == G.order or not is_isolated_brute(G, H):
                continue
            parts = {p: p_part(H, p) for p in socles}
            contained = all(
                parts[p].element_set <= socles[p].element_set for p in socles
            )
            strict = contained and all(
                parts[p].order < socles[p].order for p in socles
            )
            gens = _gens(H)
            cases.append(CaseResult(literal, True, contained, contained, gens, "contained"))
            cases.append(CaseResult(literal, True, strict, strict, gens, "strict"))
    return cases


@_suite("psi-relative-identity", order_max=64)
def _psi_relative_identity(params, get_lattice):
    order_max = int(params["order_max"])
    _require(order_max <= MAX_LATTICE_ORDER, f"order_max above {MAX_LATTICE_ORDER}")
    cases = []
    for G in abelian_types(order_max):
        literal = format_group_literal(G)
        cyclic_sets = _cyclic_element_sets(G)
        orders = {x: element_order(G, x) for x in cyclic_sets}
        for H in get_lattice(G, G.order):
            value = psi_relative(G, H, bound=max(order_max, 1))
            gens = _gens(H)
            via_quotient = H.order * psi_closed(quotient_type(G, H))
            cases.append(
                CaseResult(literal, value, via_quotient, value == via_quotient,
                           gens, "quotient-identity")
            )
            members = H.element_set
            total = Fraction(H.order)
            for x, cyc in cyclic_sets.items():
                if x not in members:
                    total += Fraction(orders[x], len(cyc & members))
            matches = total == value
            cases.append(
                CaseResult(literal, value, int(total) if total.denominator == 1 else -1,
                           matches, gens, "sum-identity")
            )
    return cases


@_suite("goursat-cross", order_max=64)
def _goursat_cross(params, get_lattice):
    order_max = int(params["order_max"])
    _require(order_max <= MAX_LATTICE_ORDER, f"order_max above {MAX_LATTICE_ORDER}")
    factors = [G for G in abelian_types(order_max // 2) if not G.is_trivial]
    cases = []
    for i, G1 in enumerate(factors):
        for G2 in factors[i:]:
            if G1.order * G2.order > order_max:
                continue
            product = make_group(G1.cyclic_orders + G2.cyclic_orders)
            reference = get_lattice(product, order_max)
            via_goursat = goursat_subgroups(G1, G2, bound=order_max)
            literal = f"{format_group_literal(G1)},{format_group_literal(G2)}"
            same = [H.elements for H in reference.subgroups] == [
                H.elements for H in via_goursat.subgroups
            ]
            cases.append(
                CaseResult(literal, len(reference), len(via_goursat),
                           len(reference) == len(via_goursat), None, "count")
            )
            cases.append(CaseResult(literal, True, same, same, None, "set"))
    return cases


# ---------------------------------------------------------------------------
# runner


def _lattice_provider(params):
    cache_dir = params.get("cache_dir")
    verify = bool(params.get("verify_cache"))

    def get(G: AbelianGroup, bound: int | None = None):
        L = None
        if cache_dir and not verify:
            L = cache_mod.load_lattice(G, cache_dir)
        if L is None:
            L = all_subgroups(G, bound=bound)
            if cache_dir and not verify:
                cache_mod.cache_lattice(G, L, cache_dir)
        if verify:
            cache_mod.verify_cache_round_trip(G, L, cache_dir or ".abiso-cache")
        return L

    return get


def run_suite(name: str, params: dict | None = None) -> VerificationReport:
    """Execute a named suite and return its report.

    ``params`` may override the suite's sweep bounds and may carry
    ``cache_dir`` / ``verify_cache`` to route lattice computation through the
    on-disk cache.
    """
    if name not in _SUITES:
        known = ", ".join(_SUITES)
        raise ValueError(f"unknown suite {name!r}; known suites: {known}")
    defaults, fn = _SUITES[name]
    merged = dict(defaults)
    extras = {"cache_dir", "verify_cache"}
    for key, value in (params or {}).items():
        if key not in defaults and key not in extras:
            raise ValueError(f"suite {name!r} does not accept parameter {key!r}")
        merged[key] = value
    start = time.perf_counter()
    cases = fn(merged, _lattice_provider(merged))
    runtime_ms = int((time.perf_counter() - start) * 1000)
    shown = {
        k: (str(v) if k == "cache_dir" and v else list(v) if isinstance(v, tuple) else v)
        for k, v in merged.items()
    }
    return VerificationReport(suite=name, parameters=shown, cases=cases, runtime_ms=runtime_ms)
