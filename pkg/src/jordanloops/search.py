"""Exhaustive enumeration of commutative (Jordan) loops of a given order.

The table is kept symmetric throughout, so one bitmask per line tracks the
symbols used in that row and column.  Propagation closes assignments under
Latin singles, commutativity mirroring, and Jordan-identity triggers; the
enumerator additionally prunes with a parity fact: in a commutative
quasigroup every symbol occurs on the diagonal with the parity of the
order, so odd-order diagonals are bijections and even-order diagonals use
every symbol an even number of times.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .tables import MagmaTable, ValidationError, _element_key, build_magma, check, find_isomorphism


@dataclass(frozen=True)
class SearchOptions:
    """What to enumerate and how hard to try."""

    order: int
    require_jordan: bool = True
    nonassociative_only: bool = False
    up_to_iso: bool = False
    node_limit: int | None = None
    time_budget: float | None = None
    result_limit: int | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    failures: int = 0
    models_found: int = 0
    models_after_iso: int = 0
    seconds: float = 0.0


class SearchIncomplete(RuntimeError):
    """The budget ran out before the space was exhausted."""

    def __init__(self, message: str, stats: SearchStats):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class PartialTable:
    """A partially filled symmetric-in-progress table; -1 marks unset cells.

    Row 0 and column 0 always hold the identity border.  row_masks[i] and
    col_masks[i] are bitsets of the symbols already placed in line i.
    """

    order: int
    cells: tuple
    row_masks: tuple = field(init=False)
    col_masks: tuple = field(init=False)

    def __post_init__(self):
        n = self.order
        cells = self.cells
        if len(cells) != n * n:
            raise ValidationError(f"expected {n * n} cells, got {len(cells)}")
        for i in range(n):
            if cells[i] != i or cells[i * n] != i:
                raise ValidationError("row 0 and column 0 must hold the identity border")
        rows = [0] * n
        cols = [0] * n
        for i in range(n):
            base = i * n
            for j in range(n):
                v = cells[base + j]
                if v == -1:
                    continue
                if not 0 <= v < n:
                    raise ValidationError(f"cell ({i},{j}) value {v} out of range")
                b = 1 << v
                if rows[i] & b:
                    raise ValidationError(f"row {i} repeats symbol {v}")
                if cols[j] & b:
                    raise ValidationError(f"column {j} repeats symbol {v}")
                rows[i] |= b
                cols[j] |= b
        object.__setattr__(self, "row_masks", tuple(rows))
        object.__setattr__(self, "col_masks", tuple(cols))

    @classmethod
    def blank(cls, order: int) -> "PartialTable":
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        cells = [-1] * (order * order)
        for i in range(order):
            cells[i] = i
            cells[i * order] = i
        return cls(order, tuple(cells))

    @classmethod
    def from_table(cls, table: MagmaTable) -> "PartialTable":
        return cls(table.order, tuple(v for row in table.rows for v in row))

    def cell(self, i: int, j: int) -> int:
        return self.cells[i * self.order + j]

    def with_cell(self, i: int, j: int, v: int) -> "PartialTable":
        cells = list(self.cells)
        cells[i * self.order + j] = v
        return PartialTable(self.order, tuple(cells))

    def is_complete(self) -> bool:
        return -1 not in self.cells

    def to_table(self, kind: str = "loop") -> MagmaTable:
        if not self.is_complete():
            raise ValueError("table still has unset cells")
        n = self.order
        return build_magma(n, [self.cells[i * n:(i + 1) * n] for i in range(n)], kind)


class _State:
    """Mutable search state shared by propagate and the enumerator."""

    __slots__ = (
        "n", "T", "pos", "free", "odd", "diag_free", "diag_odd", "diag_left",
        "sq_of", "by_sq", "trail", "queue", "require_jordan",
    )

    def __init__(self, n: int, require_jordan: bool):
        self.n = n
        self.require_jordan = require_jordan
        self.T = [-1] * (n * n)
        self.pos = [[-1] * n for _ in range(n)]
        for i in range(n):
            self.T[i] = i
            self.T[i * n] = i
            self.pos[i][i] = 0
            self.pos[0][i] = i
        full = (1 << n) - 1
        self.free = [full & ~(1 << i) for i in range(n)]
        self.free[0] = 0
        self.odd = bool(n & 1)
        self.diag_free = full & ~1
        self.diag_odd = 1  # symbol 0 sits at (0,0); relevant at even order
        self.diag_left = n - 1
        self.sq_of = [-1] * n
        self.sq_of[0] = 0
        self.by_sq = [[] for _ in range(n)]
        self.by_sq[0].append(0)
        self.trail = []
        self.queue = []

    def assign(self, i: int, j: int, v: int) -> bool:
        b = 1 << v
        free = self.free
        if i == j:
            if not (free[i] & b):
                return False
            if self.odd:
                if not (self.diag_free & b):
                    return False
                self.diag_free &= ~b
            else:
                self.diag_odd ^= b
            self.diag_left -= 1
            free[i] &= ~b
            self.sq_of[i] = v
            self.by_sq[v].append(i)
        else:
            if not (free[i] & b) or not (free[j] & b):
                return False
            free[i] &= ~b
            free[j] &= ~b
        n = self.n
        self.T[i * n + j] = v
        self.T[j * n + i] = v
        self.pos[i][v] = j
        self.pos[j][v] = i
        self.trail.append((i, j, v, b))
        self.queue.append((i, j))
        return True

    def undo(self, mark: int):
        n = self.n
        trail = self.trail
        free = self.free
        while len(trail) > mark:
            i, j, v, b = trail.pop()
            self.T[i * n + j] = -1
            self.T[j * n + i] = -1
            self.pos[i][v] = -1
            self.pos[j][v] = -1
            free[i] |= b
            if i != j:
                free[j] |= b
            else:
                if self.odd:
                    self.diag_free |= b
                else:
                    self.diag_odd ^= b
                self.diag_left += 1
                self.sq_of[i] = -1
                self.by_sq[v].pop()

    def check_instance(self, x: int, y: int) -> bool:
        """Jordan instance (x*x)*(y*x) = ((x*x)*y)*x; forces a lone unknown."""
        n = self.n
        T = self.T
        s = self.sq_of[x]
        if s < 0:
            return True
        p = T[y * n + x]
        if p < 0:
            return True
        sn = s * n
        q = T[sn + y]
        if q < 0:
            return True
        lhs = T[sn + p]
        rhs = T[q * n + x]
        if lhs >= 0:
            if rhs >= 0:
                return lhs == rhs
            return self.assign(q, x, lhs)
        if rhs >= 0:
            return self.assign(s, p, rhs)
        return True

    def _latin_single(self, i: int) -> bool:
        f = self.free[i]
        if f and not (f & (f - 1)):
            v = f.bit_length() - 1
            n = self.n
            base = i * n
            T = self.T
            for j in range(1, n):
                if T[base + j] < 0:
                    return self.assign(i, j, v)
        return True

    def process_queue(self) -> bool:
        """Close the queued assignments under all propagation rules."""
        queue = self.queue
        check_instance = self.check_instance
        n = self.n
        qi = 0
        while qi < len(queue):
            a, b = queue[qi]
            qi += 1
            if self.require_jordan:
                if a == b:
                    for y in range(1, n):
                        if not check_instance(a, y):
                            return False
                elif not check_instance(a, b) or not check_instance(b, a):
                    return False
                pos = self.pos
                sq_of = self.sq_of
                for s0, c in ((a, b), (b, a)):
                    for x in self.by_sq[s0]:
                        if x == 0:
                            continue
                        if not check_instance(x, c):
                            return False
                        y = pos[x][c]
                        if y > 0 and not check_instance(x, y):
                            return False
                    sc = sq_of[c]
                    if sc >= 0:
                        y = pos[sc][s0]
                        if y > 0 and not check_instance(c, y):
                            return False
                    if a == b:
                        break
            if not self._latin_single(a):
                return False
            if a != b and not self._latin_single(b):
                return False
        if not self.odd:
            bad = self.diag_odd.bit_count()
            if bad > self.diag_left or (self.diag_left - bad) & 1:
                return False
        del queue[:]
        return True

    def select(self):
        """Next decision cell and its candidate mask, None when complete."""
        n = self.n
        free = self.free
        if self.diag_left:
            best = None
            best_count = n + 1
            sq_of = self.sq_of
            for i in range(1, n):
                if sq_of[i] < 0:
                    c = free[i]
                    if self.odd:
                        c &= self.diag_free
                    count = c.bit_count()
                    if count < best_count:
                        best_count = count
                        best = (i, i, c)
                        if count == 0:
                            break
            return best
        line = -1
        best_count = n + 1
        for i in range(1, n):
            f = free[i]
            if f:
                count = f.bit_count()
                if count < best_count:
                    best_count = count
                    line = i
        if line < 0:
            return None
        T = self.T
        base = line * n
        best = None
        best_count = n + 1
        fline = free[line]
        for j in range(1, n):
            if T[base + j] < 0:
                c = fline & free[j] if j != line else fline
                count = c.bit_count()
                if count < best_count:
                    best_count = count
                    best = (line, j, c)
                    if count <= 1:
                        break
        return best


def propagate(pt: PartialTable, require_jordan: bool = True) -> PartialTable | None:
    """Close a partial table under Latin singles, commutativity mirroring,
    and Jordan triggers; None on contradiction."""
    n = pt.order
    cells = list(pt.cells)
    # mirror first so the symmetric engine state is well defined
    for i in range(n):
        for j in range(i + 1, n):
            a, b = cells[i * n + j], cells[j * n + i]
            if a == -1:
                cells[i * n + j] = b
            elif b != -1 and a != b:
                return None
            elif b == -1:
                cells[j * n + i] = a
    state = _State(n, require_jordan)
    for i in range(1, n):
        for j in range(i, n):
            v = cells[i * n + j]
            if v != -1 and not state.assign(i, j, v):
                return None
    for i in range(1, n):
        if not state._latin_single(i):
            return None
    if not state.process_queue():
        return None
    return PartialTable(n, tuple(state.T))


def _run(state: _State, options: SearchOptions, stats: SearchStats, models: list, start: float):
    node_limit = options.node_limit
    time_budget = options.time_budget

    def dfs():
        stats.nodes += 1
        if node_limit is not None and stats.nodes > node_limit:
            stats.seconds = time.monotonic() - start
            raise SearchIncomplete(
                f"node limit {node_limit} hit before the order-{state.n} space was exhausted",
                stats,
            )
        if time_budget is not None and not stats.nodes & 255:
            if time.monotonic() - start > time_budget:
                stats.seconds = time.monotonic() - start
                raise SearchIncomplete(
                    f"time budget {time_budget}s hit before the order-{state.n} space was exhausted",
                    stats,
                )
        sel = state.select()
        if sel is None:
            models.append(tuple(state.T))
            return
        i, j, c = sel
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            mark = len(state.trail)
            if state.assign(i, j, v) and state.process_queue():
                dfs()
            else:
                stats.failures += 1
            state.undo(mark)
            del state.queue[:]

    dfs()


def enumerate_loops(options: SearchOptions) -> tuple[list[MagmaTable], SearchStats]:
    """All commutative loops of the given order meeting the requested
    filters, lexicographically least table first, plus search statistics."""
    n = options.order
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > 64:
        raise ValueError(f"order {n} is far beyond exhaustive reach")
    stats = SearchStats()
    start = time.monotonic()
    state = _State(n, options.require_jordan)
    raw: list = []
    _run(state, options, stats, raw, start)
    raw.sort()
    tables = [
        build_magma(n, [cells[i * n:(i + 1) * n] for i in range(n)], "loop")
        for cells in raw
    ]
    if options.nonassociative_only:
        tables = [t for t in tables if not check(t, "associative")]
    stats.models_found = len(tables)
    if options.up_to_iso:
        tables = classify_up_to_iso(tables)
    stats.models_after_iso = len(tables)
    if options.result_limit is not None:
        tables = tables[: options.result_limit]
    stats.seconds = time.monotonic() - start
    return tables, stats


def classify_up_to_iso(models) -> list[MagmaTable]:
    """One representative per isomorphism class: its lexicographically least
    member, representatives sorted the same way."""
    models = list(models)
    if not models:
        return []
    orders = {m.order for m in models}
    if len(orders) != 1:
        raise ValueError(f"mixed orders {sorted(orders)} cannot be classified together")
    for m in models:
        if m.kind != "loop":
            raise ValueError("classification requires loop tables")
    models.sort(key=lambda m: m.rows)
    buckets: dict = {}
    reps: list = []
    for m in models:
        key = tuple(sorted(_element_key(m, x) for x in range(m.order)))
        found = False
        for rep in buckets.setdefault(key, []):
            if find_isomorphism(m, rep) is not None:
                found = True
                break
        if not found:
            buckets[key].append(m)
            reps.append(m)
    reps.sort(key=lambda m: m.rows)
    return reps
