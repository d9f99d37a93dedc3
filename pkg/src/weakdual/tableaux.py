"""Young, key, skew and product diagrams with their standard fillings.

Cells are ``(row, col)`` pairs, rows counted bottom-up from 1 and columns
left to right from 1.  In a product diagram the right factor is shifted so
that its first column is ``split``; one empty column separates the factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .foundations import VIRTUAL, Composition, flat, sort

Cell = tuple[int, int]

YOUNG = "young"
SKEW_YOUNG = "skew_young"
YOUNG_PRODUCT = "young_product"
KEY = "key"
SKEW_KEY = "skew_key"
KEY_PRODUCT = "key_product"


@dataclass(frozen=True)
class Filling:
    """A bijective labelling of a diagram by ``1..n``."""

    kind: str
    shape: tuple
    cells: tuple[tuple[Cell, int], ...]
    skewed: frozenset = field(default_factory=frozenset)
    split: int = 0

    @classmethod
    def build(cls, kind, shape, entries: dict, skewed=frozenset(), split: int = 0) -> "Filling":
        return cls(kind, tuple(shape), tuple(sorted(entries.items())), frozenset(skewed), split)

    @property
    def entries(self) -> dict[Cell, int]:
        return dict(self.cells)

    @property
    def position(self) -> dict[int, Cell]:
        return {v: c for c, v in self.cells}

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def nrows(self) -> int:
        """Number of rows carried by the shape (the length of ``des``)."""
        if self.kind == KEY:
            return len(self.shape)
        if self.kind in (SKEW_KEY, KEY_PRODUCT):
            return max(len(self.shape[0]), len(self.shape[1]))
        return max((r for (r, _), _ in self.cells), default=0)

    def factor(self, cell: Cell) -> int:
        return 1 if self.split and cell[1] >= self.split else 0

    def relabel(self, mapping: dict[int, int]) -> "Filling":
        return Filling(self.kind, self.shape, tuple(sorted((c, mapping.get(v, v)) for c, v in self.cells)), self.skewed, self.split)

    def swap(self, x: int, y: int) -> "Filling":
        return self.relabel({x: y, y: x})

    def rows(self) -> list[list[int | None]]:
        """Rows bottom-up; ``None`` marks skewed or missing cells."""
        ent = self.entries
        cells = list(ent) + list(self.skewed)
        if not cells:
            return []
        top = max(self.nrows, max(r for r, _ in cells))
        bottom = min(1, min(r for r, _ in cells))
        out = []
        for r in range(bottom, top + 1):
            width = max((c for rr, c in cells if rr == r), default=0)
            out.append([ent.get((r, c)) for c in range(1, width + 1)])
        return out

    def to_dict(self) -> dict:
        return {"kind": self.kind, "shape": _jsonable(self.shape), "rows": self.rows()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        """Row-per-line picture, top row first; ``##`` marks skewed cells."""
        ent = self.entries
        cells = list(ent) + list(self.skewed)
        if not cells:
            return "(empty)"
        w = max(2, len(str(self.n)))
        top = max(self.nrows, max(r for r, _ in cells))
        bottom = min(1, min(r for r, _ in cells))
        width = max(c for _, c in cells)
        lines = []
        for r in range(top, bottom - 1, -1):
            parts = []
            for c in range(1, width + 1):
                if (r, c) in ent:
                    parts.append(str(ent[(r, c)]).rjust(w))
                elif (r, c) in self.skewed:
                    parts.append("#" * w)
                elif self.split and c == self.split - 1:
                    parts.append("|".rjust(w))
                else:
                    parts.append(" " * w)
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# diagrams


def young_cells(lam: Sequence[int], col_offset: int = 0) -> list[Cell]:
    return [(r, c + col_offset) for r, part in enumerate(lam, 1) for c in range(1, part + 1)]


def key_cells(a: Sequence[int], col_offset: int = 0) -> list[Cell]:
    return young_cells(a, col_offset)


def width(a: Sequence[int]) -> int:
    return max(a, default=0)


def product_split(a: Sequence[int]) -> int:
    """First column of the right factor in a product diagram."""
    return width(a) + 2


# ---------------------------------------------------------------------------
# standard Young tableaux


def _linear_extensions(cells: Sequence[Cell], skewed: frozenset) -> Iterator[dict[Cell, int]]:
    # Cells fill in an order increasing along rows (left to right) and up columns.
    cellset = set(cells)
    n = len(cells)
    filled: dict[Cell, int] = {}

    def ready(cell):
        r, c = cell
        for pred in ((r, c - 1), (r - 1, c)):
            if pred in cellset and pred not in filled:
                return False
        return True

    def rec(k):
        if k > n:
            yield dict(filled)
            return
        for cell in cells:
            if cell not in filled and ready(cell):
                filled[cell] = k
                yield from rec(k + 1)
                del filled[cell]

    yield from rec(1)


def enumerate_syt(lam: Sequence[int], mu: Sequence[int] = ()) -> list[Filling]:
    """Standard Young tableaux of shape ``lam`` (or ``lam/mu``)."""
    lam, mu = tuple(lam), tuple(mu)
    inner = set(young_cells(mu))
    if not inner <= set(young_cells(lam)):
        raise ValueError(f"{mu} is not contained in {lam}")
    cells = [c for c in young_cells(lam) if c not in inner]
    if mu:
        kind, shape = SKEW_YOUNG, (lam, mu)
    else:
        kind, shape = YOUNG, lam
    out = [Filling.build(kind, shape, e, frozenset(inner)) for e in _linear_extensions(cells, frozenset(inner))]
    return sorted(out, key=_reading_key)


def enumerate_product_syt(mu: Sequence[int], nu: Sequence[int]) -> list[Filling]:
    mu, nu = tuple(mu), tuple(nu)
    split = product_split(mu)
    cells = young_cells(mu) + young_cells(nu, split - 1)
    out = [Filling.build(YOUNG_PRODUCT, (mu, nu), e, split=split) for e in _linear_extensions(cells, frozenset())]
    return sorted(out, key=_reading_key)


def _reading_key(T: Filling):
    return tuple(v for _, v in sorted(T.cells, key=lambda cv: (-cv[0][0], cv[0][1])))


def syt_reading_word(T: Filling) -> list[int]:
    """Columns left to right, each read top to bottom."""
    return [v for _, v in sorted(T.cells, key=lambda cv: (cv[0][1], -cv[0][0]))]


def syt_descents(T: Filling) -> list[int]:
    pos = {v: k for k, v in enumerate(syt_reading_word(T))}
    return [i for i in range(1, T.n) if pos[i + 1] < pos[i]]


def _runs_from_descents(n: int, descents: Iterable[int]) -> Composition:
    out, prev = [], 0
    for i in sorted(descents):
        out.append(i - prev)
        prev = i
    if n:
        out.append(n - prev)
    return tuple(out)


def syt_descent_composition(T: Filling) -> Composition:
    return _runs_from_descents(T.n, syt_descents(T))


def super_standard(lam: Sequence[int]) -> Filling:
    """Fill rows bottom-up with consecutive integers."""
    lam = tuple(lam)
    entries, k = {}, 0
    for r, part in enumerate(lam, 1):
        for c in range(1, part + 1):
            k += 1
            entries[(r, c)] = k
    return Filling.build(YOUNG, lam, entries)


def is_syt(T: Filling) -> bool:
    ent = T.entries
    for (r, c), v in ent.items():
        if (r, c + 1) in ent and ent[(r, c + 1)] < v:
            return False
        if (r + 1, c) in ent and ent[(r + 1, c)] < v:
            return False
    return sorted(ent.values()) == list(range(1, len(ent) + 1))


# ---------------------------------------------------------------------------
# standard key tableaux


def _row_slots(a: Sequence[int], inner: Sequence[int] = (), col_offset: int = 0) -> list[list[Cell]]:
    inner = tuple(inner) + (0,) * (len(a) - len(inner))
    rows = []
    for r, (part, skip) in enumerate(zip(a, inner), 1):
        if part > skip:
            rows.append([(r, c + col_offset) for c in range(skip + 1, part + 1)])
    return rows


def _key_backtrack(rows: list[list[Cell]], skewed: frozenset, factor_of) -> Iterator[dict[Cell, int]]:
    """Place ``n, n-1, ..., 1``; each row fills left to right."""
    n = sum(len(r) for r in rows)
    nxt = [0] * len(rows)
    filled: dict[Cell, int] = {}
    by_col: dict[tuple, list[Cell]] = {}

    def allowed(cell, x):
        r, c = cell
        for other in by_col.get((factor_of(cell), c), ()):
            rk = other[0]
            if rk >= r:
                continue
            # x sits above the larger entry k = filled[other]
            if (rk, c + 1) in filled:
                continue
            if (rk, c - 1) in skewed and (r, c - 1) in filled and filled[(r, c - 1)] < filled[other]:
                continue
            return False
        return True

    def rec(x):
        if x == 0:
            yield dict(filled)
            return
        for k, row in enumerate(rows):
            if nxt[k] == len(row):
                continue
            cell = row[nxt[k]]
            if not allowed(cell, x):
                continue
            filled[cell] = x
            by_col.setdefault((factor_of(cell), cell[1]), []).append(cell)
            nxt[k] += 1
            yield from rec(x - 1)
            nxt[k] -= 1
            by_col[(factor_of(cell), cell[1])].pop()
            del filled[cell]

    yield from rec(n)


def _no_factor(cell):
    return 0


@lru_cache(maxsize=None)
def _skt(a: Composition) -> tuple[Filling, ...]:
    out = [Filling.build(KEY, a, e) for e in _key_backtrack(_row_slots(a), frozenset(), _no_factor)]
    return tuple(sorted(out, key=_reading_key))


def enumerate_skt(a: Sequence[int]) -> list[Filling]:
    """Standard key tableaux of shape ``a``."""
    return list(_skt(tuple(a)))


def enumerate_skew_skt(d: Sequence[int], a: Sequence[int]) -> list[Filling]:
    d, a = tuple(d), tuple(a)
    if len(a) > len(d) or any(x > y for x, y in zip(a, d)):
        raise ValueError(f"{a} is not contained in {d}")
    skewed = frozenset(key_cells(a))
    out = [Filling.build(SKEW_KEY, (d, a), e, skewed) for e in _key_backtrack(_row_slots(d, a), skewed, _no_factor)]
    return sorted(out, key=_reading_key)


def enumerate_product_skt(a: Sequence[int], b: Sequence[int]) -> list[Filling]:
    a, b = tuple(a), tuple(b)
    split = product_split(a)
    rows = _row_slots(a) + _row_slots(b, (), split - 1)

    def factor_of(cell):
        return 1 if cell[1] >= split else 0

    out = [Filling.build(KEY_PRODUCT, (a, b), e, split=split) for e in _key_backtrack(rows, frozenset(), factor_of)]
    return sorted(out, key=_reading_key)


def product_filling(a: Sequence[int], b: Sequence[int], entries: dict[Cell, int]) -> Filling:
    """Product filling from cells given in factor-local coordinates:
    ``entries`` maps ``(factor, row, col)`` to labels."""
    split = product_split(a)
    glob = {(r, c + (split - 1 if f else 0)): v for (f, r, c), v in entries.items()}
    return Filling.build(KEY_PRODUCT, (tuple(a), tuple(b)), glob, split=split)


def is_skt(T: Filling) -> bool:
    """Independent check of the key tableau conditions (rows decrease, and
    the column condition with its skew relaxation), factor by factor."""
    ent = T.entries
    for (r, c), v in ent.items():
        if (r, c + 1) in ent and ent[(r, c + 1)] > v:
            return False
    for (ri, c), i in ent.items():
        for (rk, ck), k in ent.items():
            if ck != c or rk >= ri or i >= k or T.factor((ri, c)) != T.factor((rk, ck)):
                continue
            j = ent.get((rk, c + 1))
            if j is not None and i < j:
                continue
            jl = ent.get((ri, c - 1))
            if (rk, c - 1) in T.skewed and jl is not None and jl < k:
                continue
            return False
    return sorted(ent.values()) == list(range(1, len(ent) + 1))


def skt_descents(T: Filling) -> list[int]:
    """``i`` is a descent when ``i+1`` lies weakly right of ``i``."""
    pos = T.position
    return [i for i in range(1, T.n) if pos[i + 1][1] >= pos[i][1]]


def skt_runs_and_descents(T: Filling) -> tuple[list[tuple[int, ...]], Composition]:
    """Runs of ``n..1`` (top block first) and ``Des`` read from the block of 1."""
    desc = set(skt_descents(T))
    runs: list[list[int]] = []
    for v in range(T.n, 0, -1):
        if runs and v not in desc:
            runs[-1].append(v)
        else:
            runs.append([v])
    runs_t = [tuple(r) for r in runs]
    return runs_t, tuple(len(r) for r in reversed(runs_t))


def skt_descent_composition(T: Filling) -> Composition:
    return skt_runs_and_descents(T)[1]


def weak_descent_tableau(T: Filling, length: int | None = None) -> Composition | None:
    """Rows attached to runs by the min-over-block rule; ``VIRTUAL`` if any
    attached row is not positive."""
    if length is None:
        length = T.nrows
    runs, _ = skt_runs_and_descents(T)
    if not runs:
        return (0,) * length
    pos = T.position
    blocks = list(reversed(runs))  # blocks[0] holds 1
    k = len(blocks)
    t = [0] * k
    t[k - 1] = pos[blocks[k - 1][0]][0]
    for i in range(k - 2, -1, -1):
        t[i] = min(min(pos[v][0] for v in blocks[i]), t[i + 1] - 1)
    if t[0] <= 0:
        return VIRTUAL
    out = [0] * max(length, t[-1])
    for blk, r in zip(blocks, t):
        out[r - 1] = len(blk)
    return tuple(out)


def yamanouchi_key(a: Sequence[int]) -> Filling:
    """Row ``i`` holds the ``i``-th consecutive block of labels, decreasing."""
    a = tuple(a)
    entries, start = {}, 0
    for r, part in enumerate(a, 1):
        for c in range(1, part + 1):
            entries[(r, c)] = start + part - c + 1
        start += part
    return Filling.build(KEY, a, entries)


# ---------------------------------------------------------------------------
# Kohnert tableaux


@dataclass(frozen=True)
class KohnertTableau:
    """Diagram whose cells carry row-of-origin labels."""

    shape: Composition
    cells: tuple[tuple[Cell, int], ...]

    @property
    def entries(self) -> dict[Cell, int]:
        return dict(self.cells)

    def weight(self) -> Composition | None:
        if any(r <= 0 for (r, _), _ in self.cells):
            return VIRTUAL
        out = [0] * len(self.shape)
        for (r, _), _ in self.cells:
            out[r - 1] += 1
        return tuple(out)

    def render(self) -> str:
        ent = self.entries
        if not ent:
            return "(empty)"
        top = max(len(self.shape), max(r for r, _ in ent))
        bottom = min(1, min(r for r, _ in ent))
        width_ = max(c for _, c in ent)
        lines = []
        for r in range(top, bottom - 1, -1):
            line = " ".join(str(ent[(r, c)]) if (r, c) in ent else "." for c in range(1, width_ + 1))
            lines.append(line + ("   <- row 0" if r == 0 else ""))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def is_kohnert(D: KohnertTableau) -> bool:
    a, ent = D.shape, D.entries
    for i, part in enumerate(a, 1):
        mine = sorted((c, r) for (r, c), v in ent.items() if v == i)
        if [c for c, _ in mine] != list(range(1, part + 1)):
            return False
        if any(r > i for _, r in mine):
            return False
        if any(r1 < r2 for (_, r1), (_, r2) in zip(mine, mine[1:])):
            return False
    for (ri, c), i in ent.items():
        for (rj, cj), j in ent.items():
            if cj == c and i < j and ri > rj:
                if not any(v == i and cc > c and rr > rj for (rr, cc), v in ent.items()):
                    return False
    return True


def is_quasi_yamanouchi(D: KohnertTableau) -> bool:
    ent = D.entries
    rows = {r for r, _ in ent}
    for r in rows:
        if any(v == r for (rr, _), v in ent.items() if rr == r):
            continue
        left = min(c for rr, c in ent if rr == r)
        if any(c >= left for rr, c in ent if rr == r + 1):
            continue
        return False
    return True


def _weakly_decreasing_rows(count: int, hi: int, lo: int) -> Iterator[tuple[int, ...]]:
    if count == 0:
        yield ()
        return
    for r in range(hi, lo - 1, -1):
        for rest in _weakly_decreasing_rows(count - 1, r, lo):
            yield (r,) + rest


@lru_cache(maxsize=None)
def _qkt(a: Composition, virtual: bool) -> tuple[KohnertTableau, ...]:
    lo = 1 - sum(a) if virtual else 1
    labels = [i for i in range(len(a), 0, -1) if a[i - 1]]
    out = []
    occupied: dict[Cell, int] = {}

    def rec(k):
        if k == len(labels):
            D = KohnertTableau(a, tuple(sorted(occupied.items())))
            if is_kohnert(D) and is_quasi_yamanouchi(D):
                out.append(D)
            return
        i = labels[k]
        for rows in _weakly_decreasing_rows(a[i - 1], i, lo):
            cells = [(r, c) for c, r in enumerate(rows, 1)]
            if any(cell in occupied for cell in cells):
                continue
            for cell in cells:
                occupied[cell] = i
            if _partial_iv_ok(occupied, i):
                rec(k + 1)
            for cell in cells:
                del occupied[cell]

    rec(0)
    return tuple(sorted(out, key=lambda D: D.cells))


def _partial_iv_ok(ent: dict[Cell, int], i: int) -> bool:
    # Condition (iv) for pairs whose smaller label is i; all larger labels are placed.
    for (ri, c), v in ent.items():
        if v != i:
            continue
        for (rj, cj), j in ent.items():
            if cj == c and j > i and ri > rj:
                if not any(w == i and cc > c and rr > rj for (rr, cc), w in ent.items()):
                    return False
    return True


def enumerate_qkt(a: Sequence[int], virtual: bool = True) -> list[KohnertTableau]:
    """Quasi-Yamanouchi Kohnert tableaux of shape ``a``; with
    ``virtual=False`` only those with every cell in a positive row."""
    return list(_qkt(tuple(a), virtual))


def key_diagram_tableau(a: Sequence[int]) -> KohnertTableau:
    a = tuple(a)
    return KohnertTableau(a, tuple(sorted(((r, c), r) for r, part in enumerate(a, 1) for c in range(1, part + 1))))


def ascend(D: KohnertTableau) -> Filling:
    """Relabel along rows from the top (left to right) by ``n..1`` and send
    every cell back to the row named by its entry."""
    order = sorted(D.cells, key=lambda cv: (-cv[0][0], cv[0][1]))
    n = len(order)
    entries = {}
    for k, ((_, c), origin) in enumerate(order):
        entries[(origin, c)] = n - k
    return Filling.build(KEY, D.shape, entries)


def descend(T: Filling) -> KohnertTableau:
    """Push cells down minimally until reading right to left, bottom to top
    gives ``1..n``; label each cell by its original row."""
    pos = T.position
    n = T.n
    row = {n: pos[n][0]} if n else {}
    for k in range(n - 1, 0, -1):
        r0, c0 = pos[k]
        r1, c1 = row[k + 1], pos[k + 1][1]
        bound = r1 if c0 > c1 else r1 - 1
        row[k] = min(r0, bound)
    cells = tuple(sorted(((row[k], pos[k][1]), pos[k][0]) for k in range(1, n + 1)))
    return KohnertTableau(tuple(T.shape), cells)


# ---------------------------------------------------------------------------
# flattening to standard Young tableaux


def _flatten_part(cells: dict[Cell, int], skewed: Iterable[Cell]) -> tuple[dict[Cell, int], set]:
    cols: dict[int, list] = {}
    for (_, c), v in cells.items():
        cols.setdefault(c, []).append(v)
    skew_cols: dict[int, int] = {}
    for _, c in skewed:
        skew_cols[c] = skew_cols.get(c, 0) + 1
    out, inner = {}, set()
    for c in set(cols) | set(skew_cols):
        h = skew_cols.get(c, 0)
        for r in range(1, h + 1):
            inner.add((r, c))
        for k, v in enumerate(sorted(cols.get(c, []), reverse=True)):
            out[(h + k + 1, c)] = v
    return out, inner


def phi_flatten(T: Filling) -> Filling:
    """Let cells fall, sort columns to decrease upward (skewed cells lowest),
    then complement labels ``i -> n-i+1``."""
    n = T.n
    comp = {i: n - i + 1 for i in range(1, n + 1)}
    if T.kind == KEY_PRODUCT:
        a, b = T.shape
        left = {c: v for c, v in T.cells if c[1] < T.split}
        right = {(r, c - T.split + 1): v for (r, c), v in T.cells if c[1] >= T.split}
        lf, _ = _flatten_part(left, ())
        rf, _ = _flatten_part(right, ())
        split = product_split(sort(a))
        entries = dict(lf)
        entries.update({(r, c + split - 1): v for (r, c), v in rf.items()})
        F = Filling.build(YOUNG_PRODUCT, (sort(a), sort(b)), entries, split=split)
        return F.relabel(comp)
    flat_cells, inner = _flatten_part(T.entries, T.skewed)
    if T.kind == SKEW_KEY:
        d, a = T.shape
        F = Filling.build(SKEW_YOUNG, (sort(d), sort(a)), flat_cells, frozenset(inner))
    else:
        F = Filling.build(YOUNG, sort(T.shape), flat_cells)
    return F.relabel(comp)


def parse_rows(text: str) -> list[list[int]]:
    """Parse ``"5,4/3,2,1"`` (top row first) into rows listed top to bottom."""
    return [[int(v) for v in row.split(",") if v.strip()] if row.strip() else [] for row in text.split("/")]


def key_filling_from_rows(rows_top_down: Sequence[Sequence[int]], shape: Sequence[int] | None = None) -> Filling:
    """Build a key filling from rows listed top to bottom (row 1 last)."""
    rows = list(reversed([list(r) for r in rows_top_down]))
    entries = {(r, c): v for r, row in enumerate(rows, 1) for c, v in enumerate(row, 1)}
    a = tuple(len(r) for r in rows) if shape is None else tuple(shape)
    return Filling.build(KEY, a, entries)


def young_filling_from_rows(rows_top_down: Sequence[Sequence[int]]) -> Filling:
    rows = list(reversed([list(r) for r in rows_top_down]))
    entries = {(r, c): v for r, row in enumerate(rows, 1) for c, v in enumerate(row, 1)}
    return Filling.build(YOUNG, tuple(len(r) for r in rows), entries)
