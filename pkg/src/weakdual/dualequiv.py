"""Involution families, equivalence classes, axiom checks and rectification."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from . import permwords as pw
from . import tableaux as tb
from .foundations import VIRTUAL, Composition, flat, is_partition, partitions_of

# ---------------------------------------------------------------------------
# the involutions


def haiman_d(i: int, T: tb.Filling) -> tb.Filling:
    """Swap ``i`` with ``i+1`` (resp. ``i-1``) when ``i-1`` (resp. ``i+1``)
    sits between them in the column reading word."""
    n = T.n
    if not 1 < i < n:
        raise IndexError(f"index {i} out of range for n={n}")
    word = tb.syt_reading_word(T)
    pos = {v: k for k, v in enumerate(word)}
    middle = sorted((i - 1, i, i + 1), key=pos.__getitem__)[1]
    if middle == i - 1:
        return T.swap(i, i + 1)
    if middle == i + 1:
        return T.swap(i, i - 1)
    return T


def word_d(i: int, rho: Sequence[int]) -> tuple[int, ...]:
    """Braid or commutation move at positions ``i-1, i, i+1`` (1-indexed)."""
    rho = tuple(rho)
    if not 1 < i < len(rho):
        raise IndexError(f"index {i} out of range for a word of length {len(rho)}")
    a, b, c = rho[i - 2], rho[i - 1], rho[i]
    out = list(rho)
    if a == c and abs(a - b) == 1:
        out[i - 2], out[i - 1], out[i] = b, a, b
    elif a > c > b or a < c < b:
        out[i - 2], out[i - 1] = b, a
    elif c > a > b or c < a < b:
        out[i - 1], out[i] = c, b
    return tuple(out)


def skt_reading_order(T: tb.Filling) -> list[int]:
    """Columns left to right, each read bottom to top."""
    return [v for _, v in sorted(T.cells, key=lambda cv: (cv[0][1], cv[0][0]))]


def skt_d(i: int, T: tb.Filling) -> tb.Filling:
    n = T.n
    if not 1 < i < n:
        raise IndexError(f"index {i} out of range for n={n}")
    order = skt_reading_order(T)
    idx = {v: k for k, v in enumerate(order)}
    b, c, d = sorted((i - 1, i, i + 1), key=idx.__getitem__)
    if c == i:
        return T
    pos = T.position
    same_row = pos[b][0] == pos[d][0] and T.factor(pos[b]) == T.factor(pos[d])
    if same_row and not (pos[c][0] == pos[b][0] and T.factor(pos[c]) == T.factor(pos[b])):
        # braid: c takes the other extreme, the row pair takes the two others
        ent = T.entries
        cell_b, cell_c, cell_d = pos[b], pos[c], pos[d]
        left, right = sorted((cell_b, cell_d), key=lambda cell: cell[1])
        if c == i + 1:
            ent[cell_c], ent[left], ent[right] = i - 1, i + 1, i
        else:
            ent[cell_c], ent[left], ent[right] = i + 1, i, i - 1
        return tb.Filling.build(T.kind, T.shape, ent, T.skewed, T.split)
    if c == i + 1:
        return T.swap(i - 1, i)
    return T.swap(i, i + 1)


# ---------------------------------------------------------------------------
# families


@dataclass
class InvolutionFamily:
    """A finite carrier with involutions ``apply(i, x)`` for ``1 < i < n``."""

    name: str
    carrier: list
    n: int
    apply: Callable[[int, Hashable], Hashable]
    Des: Callable[[Hashable], Composition]
    des: Callable[[Hashable], Composition | None] | None = None
    length: int = 0
    meta: dict = field(default_factory=dict)

    def indices(self) -> range:
        return range(2, self.n)

    def __len__(self) -> int:
        return len(self.carrier)


def syt_family(lam: Sequence[int], mu: Sequence[int] = ()) -> InvolutionFamily:
    carrier = tb.enumerate_syt(lam, mu)
    n = sum(lam) - sum(mu)
    return InvolutionFamily(f"SYT({tuple(lam)}/{tuple(mu)})", carrier, n, haiman_d, tb.syt_descent_composition)


def product_syt_family(mu: Sequence[int], nu: Sequence[int]) -> InvolutionFamily:
    carrier = tb.enumerate_product_syt(mu, nu)
    return InvolutionFamily(f"SYT({tuple(mu)}x{tuple(nu)})", carrier, sum(mu) + sum(nu), haiman_d, tb.syt_descent_composition)


def word_family(words: Iterable[Sequence[int]], length: int | None = None, weak: bool = False, name: str = "words") -> InvolutionFamily:
    """Reduced words under the braid/commutation involutions.

    The strong orientation reads ``Des`` left to right and uses the involution
    with the same index.  The weak orientation reads runs right to left, so
    entry ``j`` of the weak structure sits at position ``n+1-j`` of the word.
    """
    carrier = sorted(tuple(w) for w in words)
    n = len(carrier[0]) if carrier else 0
    if length is None:
        length = max((max(w) for w in carrier if w), default=0)
    if weak:
        return InvolutionFamily(
            name, carrier, n, lambda j, rho: word_d(n + 1 - j, rho), pw.descent_composition,
            lambda rho: pw.weak_descent_word(rho, length), length,
        )
    return InvolutionFamily(name, carrier, n, word_d, pw.ltr_descent_composition, None, length)


def reduced_word_family(w: Sequence[int], weak: bool = False) -> InvolutionFamily:
    w = tuple(w)
    return word_family(pw.reduced_words(w), max(len(w) - 1, 1), weak, f"R({pw.format_permutation(w)})")


def skt_family(a: Sequence[int]) -> InvolutionFamily:
    a = tuple(a)
    return InvolutionFamily(
        f"SKT({a})", tb.enumerate_skt(a), sum(a), skt_d, tb.skt_descent_composition, tb.weak_descent_tableau, len(a)
    )


def skew_skt_family(d: Sequence[int], a: Sequence[int]) -> InvolutionFamily:
    d, a = tuple(d), tuple(a)
    return InvolutionFamily(
        f"SKT({d}/{a})", tb.enumerate_skew_skt(d, a), sum(d) - sum(a), skt_d,
        tb.skt_descent_composition, tb.weak_descent_tableau, len(d),
    )


def product_skt_family(a: Sequence[int], b: Sequence[int]) -> InvolutionFamily:
    a, b = tuple(a), tuple(b)
    return InvolutionFamily(
        f"SKT({a}x{b})", tb.enumerate_product_skt(a, b), sum(a) + sum(b), skt_d,
        tb.skt_descent_composition, tb.weak_descent_tableau, max(len(a), len(b)),
    )


# ---------------------------------------------------------------------------
# classes


@dataclass(frozen=True)
class EquivalenceClass:
    members: tuple
    window: tuple[int, int]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members


def orbit(fam: InvolutionFamily, x, h: int | None = None, i: int | None = None) -> EquivalenceClass:
    """Closure of ``x`` under ``apply(j, .)`` for ``h <= j <= i``."""
    h = 2 if h is None else h
    i = fam.n - 1 if i is None else i
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for j in range(h, i + 1):
            z = fam.apply(j, y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return EquivalenceClass(tuple(sorted(seen, key=_sort_key)), (h, i))


def _sort_key(x):
    if isinstance(x, tb.Filling):
        return (0, x.cells)
    return (1, x)


def classes(fam: InvolutionFamily, h: int | None = None, i: int | None = None) -> list[EquivalenceClass]:
    done: set = set()
    out = []
    for x in fam.carrier:
        if x in done:
            continue
        cls = orbit(fam, x, h, i)
        done.update(cls.members)
        out.append(cls)
    return out


def restrict_des(stat: Sequence[int] | None, h: int, i: int, n: int | None = None, weak: bool = True) -> Composition | None:
    """Delete the first ``h-1`` and the last ``n-i`` units of a composition
    of ``n``.  Weak compositions keep their length; strong ones are
    flattened afterwards."""
    if stat is VIRTUAL:
        return VIRTUAL
    parts = list(stat)
    if n is None:
        n = sum(parts)
    drop = h - 1
    for k in range(len(parts)):
        take = min(drop, parts[k])
        parts[k] -= take
        drop -= take
    drop = n - i
    for k in range(len(parts) - 1, -1, -1):
        take = min(drop, parts[k])
        parts[k] -= take
        drop -= take
    return tuple(parts) if weak else flat(parts)


def restrict_strong(stat: Sequence[int], h: int, i: int, n: int) -> Composition:
    return restrict_des(tuple(stat), h, i, n, weak=False)


# ---------------------------------------------------------------------------
# reference expansions


@lru_cache(maxsize=None)
def syt_des_counter(lam: Composition) -> Counter:
    return Counter(tb.syt_descent_composition(T) for T in tb.enumerate_syt(lam))


@lru_cache(maxsize=None)
def key_slide_counter(a: Composition) -> Counter:
    """Slide expansion of the key polynomial, via standard key tableaux."""
    c = Counter(tb.weak_descent_tableau(T) for T in tb.enumerate_skt(a))
    c.pop(VIRTUAL, None)
    return c


@lru_cache(maxsize=None)
def _by_size(n: int) -> dict:
    # canonical Des multiset -> partition
    return {frozenset(syt_des_counter(lam).items()): lam for lam in partitions_of(n)}


def schur_match(counter: Counter, n: int) -> Composition | None:
    """The partition whose SYT descent multiset equals ``counter``, if any."""
    return _by_size(n).get(frozenset(counter.items()))


def key_match(counter: Counter) -> Composition | None:
    """The weak composition ``a`` with slide expansion of ``kappa_a`` equal to
    ``counter``, if any.  The candidate is the lexicographically least index."""
    if not counter:
        return None
    a = min(counter)
    return a if key_slide_counter(a) == counter else None


def key_is_stable(a: Composition) -> bool:
    return all(T is not None and tb.weak_descent_tableau(T) is not VIRTUAL for T in tb.enumerate_skt(a))


# ---------------------------------------------------------------------------
# axiom checks


@dataclass
class Report:
    family: str
    kind: str
    windows_checked: int = 0
    classes_checked: int = 0
    failures: list = field(default_factory=list)
    classes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "kind": self.kind,
            "passed": self.passed,
            "windows_checked": self.windows_checked,
            "classes_checked": self.classes_checked,
            "failures": self.failures,
            "classes": self.classes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=_json_default)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.family} [{self.kind}] windows={self.windows_checked} classes={self.classes_checked} failures={len(self.failures)}"


def _json_default(x):
    if isinstance(x, tb.Filling):
        return x.rows()
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(type(x).__name__)


def _witness(x):
    return x.rows() if isinstance(x, tb.Filling) else list(x)


def check_involutions(fam: InvolutionFamily, report: Report) -> None:
    carrier = set(fam.carrier)
    for x in fam.carrier:
        for i in fam.indices():
            y = fam.apply(i, x)
            if y not in carrier:
                report.failures.append({"type": "leaves_carrier", "i": i, "witness": _witness(x)})
            elif fam.apply(i, y) != x:
                report.failures.append({"type": "not_involution", "i": i, "witness": _witness(x)})
        for i in fam.indices():
            for j in fam.indices():
                if j - i >= 3 and fam.apply(j, fam.apply(i, x)) != fam.apply(i, fam.apply(j, x)):
                    report.failures.append({"type": "commutation", "i": i, "j": j, "witness": _witness(x)})


def _windows(n: int):
    for h in range(2, n):
        for i in range(h, min(h + 3, n - 1) + 1):
            yield h, i


def check_dual_equivalence(fam: InvolutionFamily, windows: Iterable[tuple[int, int]] | None = None) -> Report:
    """Involution law, far commutation, and Schur-ness of every restricted
    class generated by windows of width at most four."""
    report = Report(fam.name, "dual-equivalence")
    check_involutions(fam, report)
    n = fam.n
    for h, i in (windows if windows is not None else _windows(n)):
        report.windows_checked += 1
        for cls in classes(fam, h, i):
            report.classes_checked += 1
            cnt = Counter(restrict_strong(fam.Des(x), h - 1, i + 1, n) for x in cls.members)
            lam = schur_match(cnt, i - h + 3)
            if lam is None:
                report.failures.append({"type": "not_schur", "window": [h, i], "des_list": sorted(cnt.elements()), "witness": _witness(cls.members[0])})
    for cls in classes(fam):
        cnt = Counter(fam.Des(x) for x in cls.members)
        lam = schur_match(cnt, n)
        report.classes.append({
            "class_size": len(cls),
            "des_list": [list(fam.Des(x)) for x in cls.members],
            "expansion": {"basis": "SCHUR", "terms": [{"index": list(lam), "coef": 1}] if lam is not None else []},
            "passed": lam is not None,
        })
        if lam is None:
            report.failures.append({"type": "class_not_schur", "witness": _witness(cls.members[0])})
    return report


def check_weak_dual_equivalence(fam: InvolutionFamily, windows: Iterable[tuple[int, int]] | None = None, stable: bool = False) -> Report:
    """Involution law, far commutation, and key-ness of every restricted
    class.  Virtual members contribute nothing; a class whose members are
    all virtual is recorded but not counted as a failure."""
    if fam.des is None:
        raise ValueError(f"family {fam.name} has no weak descent statistic")
    report = Report(fam.name, "weak-dual-equivalence")
    check_involutions(fam, report)
    n = fam.n
    des = {x: fam.des(x) for x in fam.carrier}
    for h, i in (windows if windows is not None else _windows(n)):
        report.windows_checked += 1
        for cls in classes(fam, h, i):
            report.classes_checked += 1
            cnt = Counter(restrict_des(des[x], h - 1, i + 1, n) for x in cls.members)
            cnt.pop(VIRTUAL, None)
            if not cnt:
                continue
            a = key_match(cnt)
            if a is None:
                report.failures.append({"type": "not_key", "window": [h, i], "des_list": sorted(cnt.elements()), "witness": _witness(cls.members[0])})
            elif stable and not key_is_stable(a):
                report.failures.append({"type": "not_stable", "window": [h, i], "key": list(a), "witness": _witness(cls.members[0])})
    for cls in classes(fam):
        cnt = Counter(des[x] for x in cls.members)
        cnt.pop(VIRTUAL, None)
        a = key_match(cnt)
        entry = {
            "class_size": len(cls),
            "des_list": [list(des[x]) if des[x] is not VIRTUAL else None for x in cls.members],
            "expansion": {"basis": "KEY", "terms": [{"index": list(a), "coef": 1}] if a is not None else []},
            "passed": a is not None or not cnt,
        }
        if a is None and cnt:
            from .foundations import expand_in_key, slide_sum

            exp = expand_in_key(slide_sum(cnt.elements(), fam.length))
            entry["expansion"] = exp.to_dict()
            entry["witness"] = _witness(cls.members[0])
            report.failures.append({"type": "class_not_key", "expansion": exp.to_text(), "witness": _witness(cls.members[0])})
        report.classes.append(entry)
    return report


# ---------------------------------------------------------------------------
# local reduced-word checks


def reduced_words_on_letters(length: int, max_letter: int) -> list[tuple[int, ...]]:
    """Every reduced word of ``length`` letters drawn from ``1..max_letter``."""
    out = []
    word: list[int] = []

    def rec(perm):
        if len(word) == length:
            out.append(tuple(word))
            return
        for letter in range(1, max_letter + 1):
            # prepending a letter right-multiplies by a position swap
            if perm[letter - 1] < perm[letter]:
                nxt = list(perm)
                nxt[letter - 1], nxt[letter] = nxt[letter], nxt[letter - 1]
                word.insert(0, letter)
                rec(nxt)
                word.pop(0)

    rec(list(range(1, max_letter + 2)))
    return out


def check_local_words(span: int, max_letter: int | None = None, weak: bool = False) -> Report:
    """Reproduce the finite check behind the window axioms on reduced words.

    Words have ``span + 3`` letters; a window ``i - h = span`` acts on exactly
    that many consecutive letters, and only the relative order and adjacency
    of letters matter, so ``2(span + 3)`` letters cover every configuration.
    The strong check asks each class to carry a Schur function.  The weak
    check shifts letters up by ``span + 3`` (removing virtual words) and asks
    each class to carry a stable key polynomial."""
    length = span + 3
    if max_letter is None:
        max_letter = 2 * length if not weak else length
    words = reduced_words_on_letters(length, max_letter)
    kind = "local-weak" if weak else "local-strong"
    report = Report(f"words(len={length}, letters<={max_letter})", kind, windows_checked=1)
    shift = length if weak else 0
    fam = word_family((tuple(v + shift for v in w) for w in words), max_letter + shift, weak=weak, name=report.family)
    check_involutions(fam, report)
    for cls in classes(fam):
        report.classes_checked += 1
        if weak:
            cnt = Counter(fam.des(x) for x in cls.members)
            if VIRTUAL in cnt:
                report.failures.append({"type": "virtual_after_shift", "witness": list(cls.members[0])})
                continue
            a = key_match(cnt)
            ok = a is not None and key_is_stable(a)
        else:
            ok = schur_match(Counter(fam.Des(x) for x in cls.members), length) is not None
        if not ok:
            report.failures.append({"type": "not_key" if weak else "not_schur", "witness": list(cls.members[0])})
    return report


# ---------------------------------------------------------------------------
# rectification


class RectificationError(RuntimeError):
    pass


def _propagate(fam: InvolutionFamily, anchor, image, target_apply, index_map=lambda j: j) -> dict:
    phi = {anchor: image}
    queue = deque([anchor])
    while queue:
        y = queue.popleft()
        for j in fam.indices():
            z = fam.apply(j, y)
            img = target_apply(index_map(j), phi[y])
            if z in phi:
                if phi[z] != img:
                    raise RectificationError(f"inconsistent propagation at index {j}")
            else:
                phi[z] = img
                queue.append(z)
    return phi


def rectification(fam: InvolutionFamily, x) -> dict:
    """Map from the full class of ``x`` onto ``SYT(lambda)``."""
    cls = orbit(fam, x)
    parts = [fam.Des(y) for y in cls.members if is_partition(fam.Des(y))]
    if not parts:
        raise RectificationError("class has no member with partition descent composition")
    lam = max(parts)
    anchors = [y for y in cls.members if fam.Des(y) == lam]
    if len(anchors) != 1 or len(cls) != len(tb.enumerate_syt(lam)):
        raise RectificationError(f"class is not isomorphic to SYT{lam}")
    phi = _propagate(fam, anchors[0], tb.super_standard(lam), haiman_d)
    for y, T in phi.items():
        if fam.Des(y) != tb.syt_descent_composition(T):
            raise RectificationError("rectification does not preserve Des")
    return phi


def rectify(fam: InvolutionFamily, x) -> tb.Filling:
    return rectification(fam, x)[x]


def is_super_standard(fam: InvolutionFamily, x) -> bool:
    T = rectify(fam, x)
    return T == tb.super_standard(T.shape)


def weak_rectification(fam: InvolutionFamily, x) -> dict:
    """Map from the full class of ``x`` onto ``SKT(a)``; the class must have
    no virtual member."""
    cls = orbit(fam, x)
    des = {y: fam.des(y) for y in cls.members}
    if any(v is VIRTUAL for v in des.values()):
        raise RectificationError("class has virtual members; stabilize first")
    a = min(des.values())
    anchors = [y for y in cls.members if des[y] == a]
    if len(anchors) != 1 or Counter(des.values()) != key_slide_counter(a) or len(cls) != len(tb.enumerate_skt(a)):
        raise RectificationError(f"class is not isomorphic to SKT{a}")
    psi = _propagate(fam, anchors[0], tb.yamanouchi_key(a), skt_d)
    for y, T in psi.items():
        if des[y] != tb.weak_descent_tableau(T):
            raise RectificationError("weak rectification does not preserve des")
    return psi


def weak_rectify(fam: InvolutionFamily, x) -> tb.Filling:
    return weak_rectification(fam, x)[x]


def word_weak_rectification(w: Sequence[int], m: int | None = None) -> dict:
    """Weak rectification of every reduced word of ``w`` after stabilizing by
    ``1^m``.  Returns ``rho -> (shifted tableau, pulled back tableau or None)``.

    The pulled back tableau exists when the stabilized shape starts with
    ``m`` zero rows; it is that tableau with the zero rows removed."""
    w = tuple(w)
    if m is None:
        m = pw.stabilization_shift(w)
    ws = pw.shift(w, m)
    fam = reduced_word_family(ws, weak=True)
    out: dict = {}
    for cls in classes(fam):
        psi = weak_rectification(fam, cls.members[0])
        for rho_s, T in psi.items():
            rho = tuple(v - m for v in rho_s)
            a = T.shape
            if any(a[:m]):
                out[rho] = (T, None)
            else:
                back = tb.Filling.build(tb.KEY, a[m:], {(r - m, c): v for (r, c), v in T.cells})
                out[rho] = (T, back)
    return out


def stabilized_skt_family(a: Sequence[int], m: int) -> InvolutionFamily:
    return skt_family((0,) * m + tuple(a))


# ---------------------------------------------------------------------------
# graph export


def to_dot(fam: InvolutionFamily, members: Iterable | None = None) -> str:
    """Plain-text graph of the involutions (one undirected edge per
    non-trivial pair, labelled by index)."""
    members = list(fam.carrier if members is None else members)
    ids = {x: k for k, x in enumerate(members)}
    lines = [f"graph \"{fam.name}\" {{"]
    for x, k in ids.items():
        label = ",".join(map(str, x)) if not isinstance(x, tb.Filling) else tb_label(x)
        stat = fam.des(x) if fam.des is not None else fam.Des(x)
        lines.append(f"  v{k} [label=\"{label}\\n{stat if stat is not None else 'virtual'}\"];")
    edges: dict = {}
    for x, k in ids.items():
        for i in fam.indices():
            y = fam.apply(i, x)
            if y != x and y in ids:
                edges.setdefault(tuple(sorted((k, ids[y]))), set()).add(i)
    for (u, v), labels in sorted(edges.items()):
        lines.append(f"  v{u} -- v{v} [label=\"{','.join(map(str, sorted(labels)))}\"];")
    lines.append("}")
    return "\n".join(lines)


def tb_label(T: tb.Filling) -> str:
    return "/".join(",".join("#" if v is None else str(v) for v in row) for row in reversed(T.rows()))
