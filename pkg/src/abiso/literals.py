"""Parsing and formatting of group literals and generator lists.

A group literal is ``ORDER ('x' ORDER)*`` with decimal orders >= 2; the
empty string names the trivial group.  Generators arrive as semicolon
separated residue tuples like ``(1,2);(0,2)`` in the group's canonical
component layout.
"""

from __future__ import annotations

import re

from .groups import AbelianGroup, Element, Subgroup, make_group


class LiteralError(ValueError):
    """Syntax error in a group or generator literal, with a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


def parse_group_literal(text: str) -> AbelianGroup:
    """Group named by a literal; permutations of the orders parse identically."""
    s = text.strip()
    if not s:
        return make_group([])
    col = 1
    orders = []
    for tok in s.split("x"):
        if not tok or not tok.isdigit():
            raise LiteralError(f"expected a decimal order, got {tok!r}", col)
        value = int(tok)
        if value <= 1:
            raise LiteralError(f"cyclic order must be >= 2, got {value}", col)
        orders.append(value)
        col += len(tok) + 1
    return make_group(orders)


def format_group_literal(G: AbelianGroup) -> str:
    """Canonical literal; the empty string for the trivial group."""
    return "x".join(str(q) for q in G.cyclic_orders)


_TUPLE_RE = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)")


def parse_generators(text: str, G: AbelianGroup) -> tuple[Element, ...]:
    """Generator tuples in the canonical layout, residues reduced per component."""
    s = text.strip()
    if not s:
        return ()
    orders = G.cyclic_orders
    out: list[Element] = []
    pos = 0
    for chunk in s.split(";"):
        m = _TUPLE_RE.fullmatch(chunk.strip())
        if m is None:
            raise LiteralError(f"expected a residue tuple like (1,0), got {chunk.strip()!r}", pos + 1)
        values = [int(v) for v in m.group(1).split(",")]
        if len(values) != len(orders):
            raise LiteralError(
                f"tuple has {len(values)} residues, layout {format_group_literal(G) or '1'} "
                f"needs {len(orders)}",
                pos + 1,
            )
        out.append(tuple(v % q for v, q in zip(values, orders)))
        pos += len(chunk) + 1
    return tuple(out)


def parse_subgroup(text: str, G: AbelianGroup) -> Subgroup:
    """Subgroup generated by a generator-list literal."""
    return Subgroup.from_generators(G, parse_generators(text, G))


def format_generators(H: Subgroup) -> str:
    return ";".join("(" + ",".join(map(str, g)) + ")" for g in H.generators)
