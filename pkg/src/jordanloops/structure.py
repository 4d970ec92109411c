"""Translations, inner mappings, normal subloops, and simplicity."""
from __future__ import annotations

from .tables import MagmaTable, Permutation
from .powers import SubsetClosure, generated_subloop


def _require_quasigroup(table: MagmaTable, op: str):
    if table.kind == "magma":
        raise ValueError(f"{op} requires a quasigroup or loop, got kind {table.kind!r}")


def _require_loop(table: MagmaTable, op: str):
    if table.kind != "loop":
        raise ValueError(f"{op} requires a loop, got kind {table.kind!r}")


def left_translation(table: MagmaTable, x: int) -> Permutation:
    """The permutation z -> x*z."""
    _require_quasigroup(table, "left_translation")
    return table.rows[x]


def right_translation(table: MagmaTable, x: int) -> Permutation:
    """The permutation z -> z*x."""
    _require_quasigroup(table, "right_translation")
    rows = table.rows
    return tuple(rows[z][x] for z in range(table.order))


def _inverse(perm) -> list:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return inv


def inner_left(table: MagmaTable, x: int, y: int) -> Permutation:
    """L(x,y): z -> (y*x) \\ (y*(x*z)); fixes the identity."""
    _require_loop(table, "inner_left")
    rows = table.rows
    rx, ry = rows[x], rows[y]
    inv = _inverse(rows[ry[x]])
    return tuple(inv[ry[rx[z]]] for z in range(table.order))


def inner_right(table: MagmaTable, x: int, y: int) -> Permutation:
    """R(x,y): z -> ((z*x)*y) / (x*y); fixes the identity."""
    _require_loop(table, "inner_right")
    rows = table.rows
    n = table.order
    xy = rows[x][y]
    inv = _inverse(tuple(rows[z][xy] for z in range(n)))
    return tuple(inv[rows[rows[z][x]][y]] for z in range(n))


def conjugation(table: MagmaTable, x: int) -> Permutation:
    """T(x): z -> (x*z) / x; the identity map in a commutative loop."""
    _require_loop(table, "conjugation")
    rows = table.rows
    n = table.order
    inv = _inverse(tuple(rows[z][x] for z in range(n)))
    return tuple(inv[rows[x][z]] for z in range(n))


def _inner_mappings(table: MagmaTable):
    """All generating inner mappings, deduplicated."""
    n = table.order
    maps = set()
    for x in range(n):
        maps.add(conjugation(table, x))
        for y in range(n):
            maps.add(inner_left(table, x, y))
            maps.add(inner_right(table, x, y))
    return tuple(maps)


def normal_closure(table: MagmaTable, seed) -> SubsetClosure:
    """Smallest normal subloop containing the seed elements."""
    _require_loop(table, "normal_closure")
    seed = tuple(sorted(set(seed)))
    maps = _inner_mappings(table)
    members = set(generated_subloop(table, seed).members)
    while True:
        extra = {f[s] for f in maps for s in members} - members
        if not extra:
            return SubsetClosure(members=tuple(sorted(members)), generators=seed)
        members = set(generated_subloop(table, tuple(members | extra)).members)


def is_normal(table: MagmaTable, members) -> bool:
    """Is the given subloop invariant under every inner mapping?"""
    _require_loop(table, "is_normal")
    if isinstance(members, SubsetClosure):
        members = members.members
    sub = set(members)
    if 0 not in sub:
        raise ValueError("a subloop must contain the identity 0")
    rows = table.rows
    for a in sub:
        for b in sub:
            if rows[a][b] not in sub:
                raise ValueError(f"not a subloop: {a}*{b} = {rows[a][b]} escapes the subset")
    return all(f[s] in sub for f in _inner_mappings(table) for s in sub)


def is_simple(table: MagmaTable) -> bool:
    """No proper nontrivial normal subloop.

    Decided by checking that every nonidentity element normally generates
    the whole loop.  The trivial loop is not simple.
    """
    _require_loop(table, "is_simple")
    n = table.order
    if n == 1:
        return False
    return all(len(normal_closure(table, (x,)).members) == n for x in range(1, n))
