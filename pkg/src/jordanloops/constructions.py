"""Constructions of finite nonassociative commutative Jordan loops.

A Jordan loop is a commutative loop satisfying x2*(y*x) = (x2*y)*x where
x2 = x*x.  Nonassociative Jordan loops exist exactly for orders n >= 6 with
n != 9; ``construct`` dispatches to a construction for each feasible order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .tables import (
    MagmaTable,
    Permutation,
    build_magma,
    check,
    cyclic_group,
    direct_product,
)


def antidiagonal_idempotent(n: int) -> MagmaTable:
    """The commutative idempotent quasigroup a*b = (a+b)/2 mod n, odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"averaging needs an odd modulus, got {n}")
    inv2 = (n + 1) // 2
    return build_magma(n, [[(a + b) * inv2 % n for b in range(n)] for a in range(n)], "quasigroup")


def idempotent_to_exp2(q: MagmaTable) -> MagmaTable:
    """Adjoin an identity and turn each x*x into the identity.

    Sends a commutative idempotent quasigroup of order n-1 to a commutative
    exponent-2 loop of order n; old element i becomes i+1.
    """
    if q.kind == "magma":
        raise ValueError("input must be a quasigroup")
    for prop in ("commutative", "idempotent"):
        if not check(q, prop):
            raise ValueError(f"input quasigroup is not {prop}")
    m = q.order
    n = m + 1
    rows = [list(range(n))]
    for i in range(m):
        row = [i + 1]
        qrow = q.rows[i]
        for j in range(m):
            row.append(0 if i == j else qrow[j] + 1)
        rows.append(row)
    return build_magma(n, rows, "loop")


def exp2_to_idempotent(l: MagmaTable) -> MagmaTable:
    """Inverse of idempotent_to_exp2: drop the identity, set x*x = x."""
    if l.kind != "loop" or l.order < 2:
        raise ValueError("input must be a nontrivial loop")
    for prop in ("commutative", "exponent-two"):
        if not check(l, prop):
            raise ValueError(f"input loop is not {prop}")
    m = l.order - 1
    rows = [
        [i if i == j else l.rows[i + 1][j + 1] - 1 for j in range(m)]
        for i in range(m)
    ]
    return build_magma(m, rows, "quasigroup")


def even_jordan(n: int) -> MagmaTable:
    """The canonical nonassociative commutative exponent-2 loop of even order n >= 6."""
    if n < 6 or n % 2:
        raise ValueError(f"even-order construction needs even n >= 6, got {n}")
    return idempotent_to_exp2(antidiagonal_idempotent(n - 1))


# -- amalgams ------------------------------------------------------------

@dataclass(frozen=True)
class AmalgamSpec:
    """Data for a loop amalgam over an outer quasigroup G.

    ``diagonal_loops[g]`` is a loop of order carrier_size+1 (identity 0)
    glued over the diagonal block (g, g); ``block_quasigroups[(g, h)]`` is a
    quasigroup of order carrier_size used for the block (g, h).  Entries for
    g == h are optional and only consulted when adjoining with a bijection
    that moves g.
    """

    group: MagmaTable
    carrier_size: int
    diagonal_loops: Mapping[int, MagmaTable]
    block_quasigroups: Mapping[tuple[int, int], MagmaTable]

    def validate(self, needed_pairs) -> None:
        if self.group.kind == "magma":
            raise ValueError("outer table must be a quasigroup")
        s = self.carrier_size
        if s < 1:
            raise ValueError(f"carrier size must be positive, got {s}")
        for g in range(self.group.order):
            loop = self.diagonal_loops.get(g)
            if loop is None:
                raise ValueError(f"missing diagonal loop for {g}")
            if loop.kind != "loop" or loop.order != s + 1:
                raise ValueError(f"diagonal loop for {g} must be a loop of order {s + 1}")
        for pair in needed_pairs:
            q = self.block_quasigroups.get(pair)
            if q is None:
                raise ValueError(f"missing block quasigroup for pair {pair}")
            if q.kind == "magma" or q.order != s:
                raise ValueError(f"block for pair {pair} must be a quasigroup of order {s}")


def quasigroup_amalgam(group: MagmaTable, blocks: Mapping[tuple[int, int], MagmaTable]) -> MagmaTable:
    """Product-like quasigroup on S x G: (s,g)(t,h) = (s *_{g,h} t, g*h).

    ``blocks[(g, h)]`` supplies the carrier quasigroup for every ordered
    pair; the pair (s, g) is encoded as s + |S|*g.
    """
    if group.kind == "magma":
        raise ValueError("outer table must be a quasigroup")
    k = group.order
    sizes = {q.order for q in blocks.values()}
    if len(sizes) != 1:
        raise ValueError("all blocks must share one carrier size")
    s = sizes.pop()
    for g in range(k):
        for h in range(k):
            q = blocks.get((g, h))
            if q is None:
                raise ValueError(f"missing block quasigroup for pair ({g},{h})")
            if q.kind == "magma":
                raise ValueError(f"block ({g},{h}) must be a quasigroup")
    n = s * k
    rows = [[0] * n for _ in range(n)]
    for g in range(k):
        grow = group.rows[g]
        for h in range(k):
            block = blocks[(g, h)].rows
            base = s * grow[h]
            for a in range(s):
                target = rows[a + s * g]
                brow = block[a]
                for b in range(s):
                    target[b + s * h] = brow[b] + base
    return build_magma(n, rows, "quasigroup")


def _amalgam_rows(spec: AmalgamSpec, c: Sequence[int]):
    """Adjoined-identity amalgam table: block (g, c(g)) carries the loop L_g."""
    g_tab = spec.group.rows
    k = spec.group.order
    s = spec.carrier_size
    n = s * k + 1
    rows = [list(range(n))]
    for g in range(k):
        for a in range(s):
            rows.append([1 + a + s * g] + [0] * (n - 1))
    for g in range(k):
        grow = g_tab[g]
        for h in range(k):
            if h == c[g]:
                block = spec.diagonal_loops[g].rows
                base = s * grow[h]
                for a in range(s):
                    target = rows[1 + a + s * g]
                    brow = block[a + 1]
                    for b in range(s):
                        u = brow[b + 1]
                        target[1 + b + s * h] = 0 if u == 0 else u + base
            else:
                block = spec.block_quasigroups[(g, h)].rows
                base = 1 + s * grow[h]
                for a in range(s):
                    target = rows[1 + a + s * g]
                    brow = block[a]
                    for b in range(s):
                        target[1 + b + s * h] = brow[b] + base
    return rows


def adjoin_identity_with_bijection(spec: AmalgamSpec, c: Permutation) -> MagmaTable:
    """Amalgam with a fresh identity, gluing L_g over block (g, c(g)).

    Returns an unvalidated magma of order |G|*|S| + 1: the result is a loop
    exactly when c is the identity map and G is idempotent.
    """
    k = spec.group.order
    if sorted(c) != list(range(k)):
        raise ValueError(f"c must be a bijection on 0..{k - 1}")
    spec.validate((g, h) for g in range(k) for h in range(k) if h != c[g])
    return build_magma(spec.carrier_size * k + 1, _amalgam_rows(spec, c), "magma")


def loop_amalgam(spec: AmalgamSpec) -> MagmaTable:
    """Loop of order |G|*|S|+1: loops L_g on the diagonal, quasigroups off it."""
    k = spec.group.order
    spec.validate((g, h) for g in range(k) for h in range(k) if h != g)
    if not check(spec.group, "idempotent"):
        raise ValueError("outer quasigroup must be idempotent for the amalgam to be a loop")
    return build_magma(spec.carrier_size * k + 1, _amalgam_rows(spec, range(k)), "loop")


def guaranteed_jordan_conditions(g: MagmaTable, l: MagmaTable, q: MagmaTable) -> bool:
    """Sufficient-and-necessary conditions for the uniform amalgam to be Jordan.

    The amalgam glues one loop L over every diagonal block and one
    quasigroup Q (carried by L minus its identity: Q index r <-> L element
    r+1) over every off-diagonal block.  It is Jordan iff L is Jordan, G and
    Q are commutative, and for all s,t in L minus identity either s*s = 0 in
    L or (s2 # t) # s = s2 # (t # s) in Q, writing # for the Q product.
    """
    if l.kind != "loop":
        raise ValueError("l must be a loop")
    if g.kind == "magma" or q.kind == "magma":
        raise ValueError("g and q must be quasigroups")
    if q.order != l.order - 1:
        raise ValueError(
            f"carrier mismatch: q has order {q.order}, expected {l.order - 1} (l minus identity)"
        )
    if not (check(l, "jordan") and check(g, "commutative") and check(q, "commutative")):
        return False
    qr = q.rows
    for a in range(1, l.order):
        sq = l.rows[a][a]
        if sq == 0:
            continue
        for b in range(1, l.order):
            if qr[sq - 1][qr[b - 1][a - 1]] != qr[qr[sq - 1][b - 1]][a - 1]:
                return False
    return True


def odd_jordan(n: int) -> MagmaTable:
    """Nonassociative Jordan loop of odd order n > 5 with n-1 not a power of 2.

    Writes n-1 = 2^l * k (k >= 3 odd) and amalgamates the cyclic group of
    order 2^l + 1 over an idempotent quasigroup of order k, off-diagonal
    blocks carrying the cyclic group of order 2^l on L minus its identity.
    """
    if n <= 5 or n % 2 == 0:
        raise ValueError(f"odd-order construction needs odd n > 5, got {n}")
    m = n - 1
    l = (m & -m).bit_length() - 1
    k = m >> l
    if k < 3:
        raise ValueError(f"n - 1 = {m} is a power of 2; this construction does not apply")
    carrier = 1 << l
    g = antidiagonal_idempotent(k)
    loop = cyclic_group(carrier + 1)
    q = cyclic_group(carrier)
    spec = AmalgamSpec(
        group=g,
        carrier_size=carrier,
        diagonal_loops={i: loop for i in range(k)},
        block_quasigroups={(i, j): q for i in range(k) for j in range(k) if i != j},
    )
    return loop_amalgam(spec)


# -- union-of-groups and subquasigroup replacement -----------------------

def union_of_groups(group: MagmaTable, parts: Sequence, quasis: Sequence[MagmaTable]) -> MagmaTable:
    """Jordan quasigroup on G minus identity from subgroups covering G.

    ``parts`` are subgroups of the abelian group G, pairwise meeting in the
    identity and covering G; ``quasis[i]`` is a Jordan quasigroup placed on
    parts[i] minus the identity (members sorted ascending).  Element e of G
    becomes e-1.
    """
    if group.kind != "loop" or not check(group, "associative") or not check(group, "commutative"):
        raise ValueError("outer table must be an abelian group")
    n = group.order
    parts = [sorted(set(p)) for p in parts]
    if len(quasis) != len(parts):
        raise ValueError("need one quasigroup per part")
    seen = set()
    for p in parts:
        if not p or p[0] != 0:
            raise ValueError("every part must contain the identity 0")
        members = set(p)
        for a in p:
            for b in p:
                if group.rows[a][b] not in members:
                    raise ValueError(f"part {p} is not closed under the group product")
        overlap = (seen & members) - {0}
        if overlap:
            raise ValueError(f"parts overlap outside the identity: {sorted(overlap)}")
        seen |= members
    if seen != set(range(n)):
        raise ValueError("parts must cover the whole group")
    part_of = {}
    for idx, p in enumerate(parts):
        for e in p[1:]:
            part_of[e] = idx
    for idx, (p, q) in enumerate(zip(parts, quasis)):
        if q.kind == "magma" or q.order != len(p) - 1:
            raise ValueError(f"quasigroup {idx} must have order {len(p) - 1}")
        if not check(q, "jordan"):
            raise ValueError(f"quasigroup {idx} is not a Jordan quasigroup")
    rows = [[0] * (n - 1) for _ in range(n - 1)]
    for x in range(1, n):
        px = part_of[x]
        grow = group.rows[x]
        for y in range(1, n):
            if part_of[y] == px:
                nz = parts[px][1:]
                rows[x - 1][y - 1] = nz[quasis[px].rows[nz.index(x)][nz.index(y)]] - 1
            else:
                rows[x - 1][y - 1] = grow[y] - 1
    return build_magma(n - 1, rows, "quasigroup")


@dataclass(frozen=True)
class PartitionedQuasigroup:
    """A quasigroup with a partition into product-closed blocks."""

    table: MagmaTable
    blocks: tuple

    def __init__(self, table: MagmaTable, blocks):
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "blocks", tuple(tuple(sorted(set(b))) for b in blocks))

    def validate(self) -> None:
        if self.table.kind == "magma":
            raise ValueError("partitioned table must be a quasigroup")
        n = self.table.order
        seen = []
        for block in self.blocks:
            members = set(block)
            for a in block:
                for b in block:
                    if self.table.rows[a][b] not in members:
                        raise ValueError(f"block {block} is not closed under the product")
            seen.extend(block)
        if sorted(seen) != list(range(n)):
            raise ValueError("blocks must partition the carrier")


def replace_subquasigroups(pq: PartitionedQuasigroup, loops: Mapping[int, MagmaTable]) -> MagmaTable:
    """Adjoin an identity and replace each closed block with a loop.

    ``loops[i]`` (order |block_i|+1, identity 0) is laid over block i, its
    ascending members matching loop elements 1..|block_i|.  Cross-block
    products are kept; the result is a loop of order |Q|+1 with old element
    e at index e+1.
    """
    pq.validate()
    q = pq.table
    n = q.order
    for idx, block in enumerate(pq.blocks):
        loop = loops.get(idx)
        if loop is None:
            raise ValueError(f"missing replacement loop for block {idx}")
        if loop.kind != "loop" or loop.order != len(block) + 1:
            raise ValueError(f"replacement {idx} must be a loop of order {len(block) + 1}")
    slot = {}
    block_of = {}
    for idx, block in enumerate(pq.blocks):
        for pos, e in enumerate(block):
            slot[e] = pos + 1
            block_of[e] = idx
    rows = [list(range(n + 1))]
    for x in range(n):
        row = [x + 1]
        bx = block_of[x]
        block = pq.blocks[bx]
        lrows = loops[bx].rows
        qrow = q.rows[x]
        for y in range(n):
            if block_of[y] == bx:
                u = lrows[slot[x]][slot[y]]
                row.append(0 if u == 0 else block[u - 1] + 1)
            else:
                row.append(qrow[y] + 1)
        rows.append(row)
    return build_magma(n + 1, rows, "loop")


def fermat_jordan(m: int) -> MagmaTable:
    """Nonassociative Jordan loop of order 2^m + 1 for m > 3.

    Takes the union-of-subgroups Jordan quasigroup of order 8 built from the
    four order-3 subgroups of Z3 x Z3, crosses it with the cyclic group of
    order 2^(m-3), and replaces the four order-2^(m-2) blocks with copies of
    the cyclic group of order 2^(m-2) + 1.
    """
    if m <= 3:
        raise ValueError(f"this construction needs m > 3, got {m}")
    g9 = direct_product(cyclic_group(3), cyclic_group(3))
    # the four subgroups <a>, <b>, <ab>, <ab2> for a = (1,0) = 3, b = (0,1) = 1
    parts = [(0, 3, 6), (0, 1, 2), (0, 4, 8), (0, 5, 7)]
    z2 = cyclic_group(2)
    q8 = union_of_groups(g9, parts, [z2] * 4)
    c = cyclic_group(1 << (m - 3))
    qbar = direct_product(c, q8)
    blocks = [
        tuple(i * 8 + (e - 1) for i in range(c.order) for e in part[1:])
        for part in parts
    ]
    big = cyclic_group((1 << (m - 2)) + 1)
    return replace_subquasigroups(
        PartitionedQuasigroup(qbar, blocks), {i: big for i in range(4)}
    )


def fermat_subloop_members(m: int) -> tuple:
    """Element indices of the canonical order-2^(m-2)+1 subloop of fermat_jordan(m)."""
    if m <= 3:
        raise ValueError(f"this construction needs m > 3, got {m}")
    first = tuple(i * 8 + (e - 1) for i in range(1 << (m - 3)) for e in (3, 6))
    return (0,) + tuple(sorted(e + 1 for e in first))


def construct(n: int) -> MagmaTable:
    """A nonassociative Jordan loop of order n, for any n >= 6 except 9."""
    if n < 6 or n == 9:
        raise ValueError(
            f"no nonassociative Jordan loop of order {n} exists; "
            "valid orders are n >= 6 with n != 9"
        )
    if n % 2 == 0:
        return even_jordan(n)
    m = n - 1
    l = (m & -m).bit_length() - 1
    if (m >> l) >= 3:
        return odd_jordan(n)
    return fermat_jordan(l)


# -- hypercube extension -------------------------------------------------

def hyper_extend(a: MagmaTable) -> MagmaTable:
    """Extend a commutative loop of order 2^n - 1 by an n-bit hypercube.

    Element i of A keeps index i (its n-bit label is binary i); hypercube
    label v gets index (2^n - 1) + v.  Writing (x) for A elements and [x]
    for labels: (x)(y) is the A product, (x)[v] = [x xor v], [u][u] = [~u],
    and [u][v] = (~(u xor v)) for u != v.  The result has order 2^(n+1)-1,
    is Jordan when A is, and every hypercube element has order 3.
    """
    if a.kind != "loop" or not check(a, "commutative"):
        raise ValueError("input must be a commutative loop")
    m = a.order
    if m & (m + 1):
        raise ValueError(f"order must be 2^n - 1, got {m}")
    bits = m.bit_length()
    n = 2 * m + 1
    mask = m  # n-bit all-ones
    rows = []
    for i in range(m):
        arow = a.rows[i]
        rows.append([arow[j] for j in range(m)] + [m + (i ^ v) for v in range(m + 1)])
    for u in range(m + 1):
        row = [m + (u ^ j) for j in range(m)]
        for v in range(m + 1):
            row.append(m + (mask ^ u) if u == v else mask ^ u ^ v)
        rows.append(row)
    return build_magma(n, rows, "loop")


def jordan_tower(depth: int) -> MagmaTable:
    """Iterate hyper_extend from the trivial loop: order 2^(depth+1) - 1.

    Depth 1 gives the cyclic group of order 3; every deeper level is a
    simple nonassociative Jordan loop that is not left-alternative.
    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    if depth > 15:
        raise ValueError(f"depth {depth} exceeds the supported table size")
    t = build_magma(1, [[0]], "loop")
    for _ in range(depth):
        t = hyper_extend(t)
    return t
