"""Powers in loops: right powers, parenthesization sets, generated subloops.

In a nonassociative loop c^k depends on parenthesization.  The right power
is c^k = c*(c^(k-1)); c^k is called well-defined when every way of
parenthesizing k factors of c gives the same value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .tables import MagmaTable, Permutation, build_magma

DEFAULT_EXPONENT_CAP = 64


def _require_loop(table: MagmaTable, op: str):
    if table.kind != "loop":
        raise ValueError(f"{op} requires a loop, got kind {table.kind!r}")


def _check_element(table: MagmaTable, c: int):
    if not 0 <= c < table.order:
        raise ValueError(f"element {c} out of range 0..{table.order - 1}")


def right_power(table: MagmaTable, c: int, k: int) -> int:
    """The right-associated power c*(c*(...*c)) with k factors; c^0 = 0."""
    _require_loop(table, "right_power")
    _check_element(table, c)
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    row = table.rows[c]
    v = 0
    for _ in range(k):
        v = row[v]
    return v


def power_profile(table: MagmaTable, c: int, max_k: int, cap: int = DEFAULT_EXPONENT_CAP) -> list:
    """parenthesization_set for every exponent 1..max_k, as a list indexed by k.

    Index 0 is a placeholder None; sets[k] holds every value obtainable by
    parenthesizing k factors of c.
    """
    _require_loop(table, "power_profile")
    _check_element(table, c)
    if max_k < 1:
        raise ValueError(f"exponent must be positive, got {max_k}")
    if max_k > cap:
        raise ValueError(f"exponent {max_k} exceeds the cap {cap}")
    rows = table.rows
    sets: list = [None, frozenset((c,))]
    for k in range(2, max_k + 1):
        vals = set()
        for i in range(1, k):
            right = sets[k - i]
            for a in sets[i]:
                ra = rows[a]
                vals.update(ra[b] for b in right)
        sets.append(frozenset(vals))
    return sets


def parenthesization_set(table: MagmaTable, c: int, k: int, cap: int = DEFAULT_EXPONENT_CAP) -> frozenset:
    """All values of k-factor products of c over every parenthesization."""
    return power_profile(table, c, k, cap)[k]


def is_well_defined(table: MagmaTable, c: int, k: int) -> bool:
    """True when every parenthesization of c^j agrees for each j <= k.

    Uses the recursive criterion: c^k is well-defined iff for every
    0 < j < k, c^j is well-defined and c^j * c^(k-j) = c^k.
    """
    _require_loop(table, "is_well_defined")
    _check_element(table, c)
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    rows = table.rows
    powers = [0] * (k + 1)
    for j in range(1, k + 1):
        powers[j] = rows[c][powers[j - 1]]
    memo = {0: True, 1: True}

    def wd(j):
        known = memo.get(j)
        if known is not None:
            return known
        pj = powers[j]
        ok = all(wd(i) and rows[powers[i]][powers[j - i]] == pj for i in range(1, j))
        memo[j] = ok
        return ok

    return wd(k)


@dataclass(frozen=True)
class SubsetClosure:
    """A closed subset of a loop together with the generators that produced it."""

    members: tuple
    generators: tuple


def generated_subloop(table: MagmaTable, gens) -> SubsetClosure:
    """Smallest subset containing 0 and the generators, closed under the
    product and both divisions."""
    _require_loop(table, "generated_subloop")
    gens = tuple(sorted(set(gens)))
    for g in gens:
        _check_element(table, g)
    rows = table.rows
    members = {0}
    members.update(gens)
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        ra = rows[a]
        for b in tuple(members):
            new = (ra[b], rows[b][a], ra.index(b), rows[b].index(a))
            for v in new:
                if v not in members:
                    members.add(v)
                    frontier.append(v)
    return SubsetClosure(members=tuple(sorted(members)), generators=gens)


def _associative_on(table: MagmaTable, members) -> bool:
    rows = table.rows
    for a in members:
        ra = rows[a]
        for b in members:
            ab = ra[b]
            rb = rows[b]
            rab = rows[ab]
            for c in members:
                if rab[c] != ra[rb[c]]:
                    return False
    return True


def is_power_associative(table: MagmaTable) -> bool:
    """Does every element generate an associative subloop?"""
    _require_loop(table, "is_power_associative")
    return all(
        _associative_on(table, generated_subloop(table, (x,)).members)
        for x in range(table.order)
    )


def element_order(table: MagmaTable, c: int) -> int | None:
    """|<c>| when <c> is associative (then cyclic), else None."""
    _require_loop(table, "element_order")
    _check_element(table, c)
    closure = generated_subloop(table, (c,))
    if not _associative_on(table, closure.members):
        return None
    row = table.rows[c]
    v = row[0]
    k = 1
    while v != 0:
        v = row[v]
        k += 1
    return k


# -- the well-definedness gap loop ---------------------------------------

@dataclass(frozen=True)
class PowersLoopParams:
    """Parameters of the order-n*s loop whose generator c has well-defined
    powers below m*n but not at m*n."""

    m: int
    n: int
    s: int
    phi: Permutation

    def circ(self, u: int, v: int) -> int:
        """The twisted addition [u] o [v] = phi^-1(phi(u) + phi(v)) on Z_s."""
        phi = self.phi
        return phi.index((phi[u] + phi[v]) % self.s)


def powers_gap_params(m: int, n: int) -> PowersLoopParams:
    """s = least integer >= m+2 coprime to n, and the permutation phi of Z_s
    fixing i*[n] for i < m and reversing the tail."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    s = m + 2
    while math.gcd(s, n) != 1:
        s += 1
    phi = [0] * s
    for i in range(s):
        val = i if i <= m - 1 else s + m - i - 1
        phi[i * n % s] = val * n % s
    return PowersLoopParams(m=m, n=n, s=s, phi=tuple(phi))


def powers_gap_loop(m: int, n: int) -> tuple[MagmaTable, int]:
    """Loop of order n*s on pairs (a, u) encoded a + n*u, with generator c.

    (a1,u1)*(a2,u2) is componentwise addition unless a1 = a2 = 0, in which
    case the second component uses the twisted addition of powers_gap_params.
    The generator c = (1, 1) satisfies c^k = (k mod n, k mod s); its powers
    are well-defined for k < m*n but c^(p*n) * c^((m-p)*n) != c^(m*n) for
    every 0 < p < m.
    """
    params = powers_gap_params(m, n)
    s = params.s
    order = n * s
    circ = [[params.circ(u, v) for v in range(s)] for u in range(s)]
    rows = [[0] * order for _ in range(order)]
    for u1 in range(s):
        for a1 in range(n):
            row = rows[a1 + n * u1]
            cu = circ[u1]
            for u2 in range(s):
                for a2 in range(n):
                    if a1 == 0 and a2 == 0:
                        row[n * u2] = n * cu[u2]
                    else:
                        row[a2 + n * u2] = (a1 + a2) % n + n * ((u1 + u2) % s)
    return build_magma(order, rows, "loop"), 1 + n
