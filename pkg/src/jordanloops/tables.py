"""Finite magma/quasigroup/loop multiplication tables and property checks.

Elements of an order-n table are the indices 0..n-1; the table is stored
row-major, so ``M.rows[x][y]`` is the product x*y.  Loops always place their
identity at index 0.
"""
from __future__ import annotations

Element = int
Permutation = tuple[int, ...]
PropertyTag = str

PROPERTY_TAGS = (
    "latin",
    "has-identity",
    "commutative",
    "associative",
    "idempotent",
    "exponent-two",
    "left-alternative",
    "jordan",
)

KINDS = ("magma", "quasigroup", "loop")

ORDER_LIMIT = 1 << 16


class ValidationError(ValueError):
    """A table failed validation against its claimed kind or wire format."""


class MagmaTable:
    """Immutable multiplication table with a validated kind claim."""

    __slots__ = ("order", "kind", "rows")

    def __init__(self, order: int, rows, kind: str):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("MagmaTable is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MagmaTable)
            and self.order == other.order
            and self.kind == other.kind
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.order, self.kind, self.rows))

    def __repr__(self):
        return f"MagmaTable(order={self.order}, kind={self.kind!r})"


def _latin_violation(rows, n):
    """First duplicated symbol, columns scanned before rows."""
    for j in range(n):
        seen = set()
        for i in range(n):
            v = rows[i][j]
            if v in seen:
                return f"column {j} repeats symbol {v}"
            seen.add(v)
    for i in range(n):
        seen = set()
        for v in rows[i]:
            if v in seen:
                return f"row {i} repeats symbol {v}"
            seen.add(v)
    return None


def build_magma(order: int, rows, kind: str = "magma") -> MagmaTable:
    """Validate ``rows`` against the claimed kind and freeze it as a table.

    kind "magma" asks for shape only; "quasigroup" adds the Latin property;
    "loop" additionally requires element 0 to be a two-sided identity.
    """
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}")
    if not 1 <= order <= ORDER_LIMIT:
        raise ValidationError(f"order {order} out of supported range 1..{ORDER_LIMIT}")
    rows = [list(r) for r in rows]
    if len(rows) != order:
        raise ValidationError(f"expected {order} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != order:
            raise ValidationError(f"row {i} has {len(row)} entries, expected {order}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
                raise ValidationError(f"cell ({i},{j}) value {v!r} out of range 0..{order - 1}")
    if kind != "magma":
        bad = _latin_violation(rows, order)
        if bad is not None:
            raise ValidationError(bad)
    if kind == "loop":
        for x in range(order):
            if rows[0][x] != x:
                raise ValidationError(f"element 0 is not a left identity: 0*{x} = {rows[0][x]}")
            if rows[x][0] != x:
                raise ValidationError(f"element 0 is not a right identity: {x}*0 = {rows[x][0]}")
    return MagmaTable(order, rows, kind)


def identity_element(table: MagmaTable) -> int | None:
    """The two-sided identity, wherever it sits, or None."""
    rows = table.rows
    n = table.order
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            return e
    return None


def find_counterexample(table: MagmaTable, prop: PropertyTag) -> str | None:
    """None if ``prop`` holds, else a description of the first violation."""
    if prop not in PROPERTY_TAGS:
        raise ValueError(f"unknown property {prop!r}")
    rows = table.rows
    n = table.order
    if prop == "latin":
        return _latin_violation(rows, n)
    if prop == "has-identity":
        if identity_element(table) is None:
            return "no two-sided identity element"
        return None
    if prop == "commutative":
        for x in range(n):
            for y in range(x + 1, n):
                if rows[x][y] != rows[y][x]:
                    return f"x={x} y={y}: x*y={rows[x][y]} but y*x={rows[y][x]}"
        return None
    if prop == "associative":
        for x in range(n):
            rx = rows[x]
            for y in range(n):
                xy = rx[y]
                ry = rows[y]
                rxy = rows[xy]
                for z in range(n):
                    if rxy[z] != rx[ry[z]]:
                        return (
                            f"x={x} y={y} z={z}: (x*y)*z={rxy[z]} "
                            f"but x*(y*z)={rx[ry[z]]}"
                        )
        return None
    if prop == "idempotent":
        for x in range(n):
            if rows[x][x] != x:
                return f"x={x}: x*x={rows[x][x]}"
        return None
    if prop == "exponent-two":
        e = identity_element(table)
        if e is None:
            raise ValueError("exponent-two is undefined on a table with no identity element")
        bad = _latin_violation(rows, n)
        if bad is not None:
            return bad
        for x in range(n):
            if rows[x][x] != e:
                return f"x={x}: x*x={rows[x][x]}, identity is {e}"
        return None
    if prop == "left-alternative":
        for x in range(n):
            rx = rows[x]
            xx = rx[x]
            for y in range(n):
                if rx[rx[y]] != rows[xx][y]:
                    return (
                        f"x={x} y={y}: x*(x*y)={rx[rx[y]]} "
                        f"but (x*x)*y={rows[xx][y]}"
                    )
        return None
    if prop == "jordan":
        bad = find_counterexample(table, "commutative")
        if bad is not None:
            return bad
        for x in range(n):
            s = rows[x][x]
            rs = rows[s]
            for y in range(n):
                # x2*(y*x) = (x2*y)*x
                lhs = rs[rows[y][x]]
                rhs = rows[rs[y]][x]
                if lhs != rhs:
                    return f"x={x} y={y}: x2*(y*x)={lhs} but (x2*y)*x={rhs}"
        return None
    raise AssertionError(prop)


def check(table: MagmaTable, prop: PropertyTag) -> bool:
    """Does the table satisfy the named property?"""
    return find_counterexample(table, prop) is None


def squaring_bijective(table: MagmaTable) -> bool:
    """Is x -> x*x a bijection?"""
    rows = table.rows
    return len({rows[x][x] for x in range(table.order)}) == table.order


def _require_quasigroup(table: MagmaTable, op: str):
    if table.kind == "magma":
        raise ValueError(f"{op} requires a quasigroup or loop, got kind {table.kind!r}")


def left_divide(table: MagmaTable, a: int, b: int) -> int:
    """The unique x with a*x = b."""
    _require_quasigroup(table, "left_divide")
    return table.rows[a].index(b)


def right_divide(table: MagmaTable, a: int, b: int) -> int:
    """The unique x with x*a = b."""
    _require_quasigroup(table, "right_divide")
    rows = table.rows
    for x in range(table.order):
        if rows[x][a] == b:
            return x
    raise AssertionError("non-Latin table slipped through validation")


def opposite(table: MagmaTable) -> MagmaTable:
    """The transposed table: x *' y = y*x."""
    n = table.order
    rows = table.rows
    return build_magma(n, [[rows[j][i] for j in range(n)] for i in range(n)], table.kind)


def direct_product(a: MagmaTable, b: MagmaTable) -> MagmaTable:
    """Componentwise product on pairs, pair (i, j) encoded as i*|B| + j."""
    na, nb = a.order, b.order
    n = na * nb
    if n > ORDER_LIMIT:
        raise ValueError(f"product order {n} exceeds the supported limit {ORDER_LIMIT}")
    ra, rb = a.rows, b.rows
    rows = [[0] * n for _ in range(n)]
    for i1 in range(na):
        for j1 in range(nb):
            x = i1 * nb + j1
            rowx = rows[x]
            rai = ra[i1]
            rbj = rb[j1]
            for i2 in range(na):
                base = rai[i2] * nb
                off = i2 * nb
                for j2 in range(nb):
                    rowx[off + j2] = base + rbj[j2]
    kind = KINDS[min(KINDS.index(a.kind), KINDS.index(b.kind))]
    return build_magma(n, rows, kind)


def cyclic_group(n: int) -> MagmaTable:
    """Addition modulo n as a loop table."""
    if not 1 <= n <= ORDER_LIMIT:
        raise ValueError(f"order {n} out of supported range 1..{ORDER_LIMIT}")
    return build_magma(n, [[(i + j) % n for j in range(n)] for i in range(n)], "loop")


# -- isomorphism ---------------------------------------------------------

def _power_order(table: MagmaTable, x: int) -> int | None:
    """Least k with x^k = identity, or None.

    Defined only when every parenthesization of x^k agrees for all k up to
    the table order; otherwise powers are ambiguous and the order is None.
    """
    n = table.order
    rows = table.rows
    if x == 0:
        return 1
    powers = [0, x]
    for k in range(2, n + 1):
        vals = {rows[powers[i]][powers[k - i]] for i in range(1, k)}
        if len(vals) != 1:
            return None
        v = vals.pop()
        if v == 0:
            return k
        powers.append(v)
    return None


def _element_key(table: MagmaTable, x: int):
    """Cheap isomorphism-invariant data for one element."""
    rows = table.rows
    n = table.order
    order = _power_order(table, x)
    commutant = sum(1 for y in range(n) if rows[x][y] == rows[y][x])
    # iterated-squaring walk: steps until a repeat, then the cycle length
    seen = {}
    v = x
    step = 0
    while v not in seen:
        seen[v] = step
        v = rows[v][v]
        step += 1
    return (-1 if order is None else order, commutant, seen[v], step - seen[v])


def _product_closure(rows, members):
    """Close a set of elements under the table product."""
    closed = set(members)
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        ra = rows[a]
        for b in tuple(closed):
            for c in (ra[b], rows[b][a]):
                if c not in closed:
                    closed.add(c)
                    frontier.append(c)
    return closed


def find_isomorphism(lhs: MagmaTable, rhs: MagmaTable) -> Permutation | None:
    """A relabeling pi with pi(x*y) = pi(x)*pi(y), fixing pi(0) = 0, or None."""
    for t in (lhs, rhs):
        if t.kind != "loop":
            raise ValueError(f"find_isomorphism requires loops, got kind {t.kind!r}")
    n = lhs.order
    if rhs.order != n:
        return None
    keys1 = [_element_key(lhs, x) for x in range(n)]
    keys2 = [_element_key(rhs, x) for x in range(n)]
    if sorted(keys1) != sorted(keys2):
        return None
    r1, r2 = lhs.rows, rhs.rows

    # greedy generating sequence: images of these determine the whole map
    gens = []
    closed = {0}
    while len(closed) < n:
        g = min(set(range(n)) - closed)
        gens.append(g)
        closed = _product_closure(r1, closed | {g})

    def close(pi, used, mapped, a, b):
        """Set pi[a]=b and propagate products; False on conflict."""
        if keys1[a] != keys2[b] or used[b]:
            return False
        pi[a] = b
        used[b] = True
        mapped.append(a)
        queue = [a]
        while queue:
            u = queue.pop()
            pu = pi[u]
            for w in tuple(mapped):
                pw = pi[w]
                for c1, c2 in ((r1[u][w], r2[pu][pw]), (r1[w][u], r2[pw][pu])):
                    m = pi[c1]
                    if m == -1:
                        if used[c2] or keys1[c1] != keys2[c2]:
                            return False
                        pi[c1] = c2
                        used[c2] = True
                        mapped.append(c1)
                        queue.append(c1)
                    elif m != c2:
                        return False
        return True

    def backtrack(idx, pi, used, mapped):
        while idx < len(gens) and pi[gens[idx]] != -1:
            idx += 1
        if idx == len(gens):
            return pi
        g = gens[idx]
        for cand in range(n):
            pi2 = pi.copy()
            used2 = used.copy()
            mapped2 = mapped.copy()
            if close(pi2, used2, mapped2, g, cand):
                result = backtrack(idx + 1, pi2, used2, mapped2)
                if result is not None:
                    return result
        return None

    pi0 = [-1] * n
    pi0[0] = 0
    used0 = [False] * n
    used0[0] = True
    result = backtrack(0, pi0, used0, [0])
    return None if result is None else tuple(result)


# -- text wire format ----------------------------------------------------

def serialize_table(table: MagmaTable) -> str:
    """Render as the plain-text wire format (header lines, then the rows)."""
    lines = [f"order {table.order}", f"kind {table.kind}"]
    lines.extend(" ".join(str(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def _parse_chunk(lines) -> MagmaTable:
    if len(lines) < 2:
        raise ValidationError("truncated table: missing header lines")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ValidationError(f"expected 'order <n>' header, got {lines[0]!r}")
    try:
        order = int(head[1])
    except ValueError:
        raise ValidationError(f"bad order {head[1]!r}") from None
    kind_line = lines[1].split()
    if len(kind_line) != 2 or kind_line[0] != "kind" or kind_line[1] not in KINDS:
        raise ValidationError(f"expected 'kind magma|quasigroup|loop', got {lines[1]!r}")
    body = lines[2:]
    if len(body) != order:
        raise ValidationError(f"expected {order} table rows, got {len(body)}")
    rows = []
    for line in body:
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValidationError(f"bad table row {line!r}") from None
    return build_magma(order, rows, kind_line[1])


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        yield line


def parse_table(text: str) -> MagmaTable:
    """Parse one table; comment lines (leading '#') and blank lines ignored."""
    lines = [ln for ln in _content_lines(text) if ln]
    return _parse_chunk(lines)


def parse_tables(text: str) -> list[MagmaTable]:
    """Parse a blank-line-separated stream of tables."""
    chunks = []
    current = []
    for line in _content_lines(text):
        if line:
            current.append(line)
        elif current:
            chunks.append(current)
            current = []
    if current:
        chunks.append(current)
    return [_parse_chunk(c) for c in chunks]
