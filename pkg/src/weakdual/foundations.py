"""Compositions, exact sparse polynomials, and the two fundamental families.

Weak compositions, strong compositions and partitions are plain tuples of
ints.  The length of a weak composition is significant and never changes
implicitly; use :func:`pad` when a longer exponent vector is needed.

``VIRTUAL`` marks a weak descent composition that does not exist.  Every
generating-polynomial contribution of a virtual object is zero.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Composition = tuple[int, ...]

VIRTUAL = None

MONOMIAL = "MONOMIAL"
FUNDAMENTAL_F = "FUNDAMENTAL_F"
SLIDE = "SLIDE"
SCHUR = "SCHUR"
KEY = "KEY"

BASIS_SYMBOL = {
    MONOMIAL: "x",
    FUNDAMENTAL_F: "F",
    SLIDE: "slide",
    SCHUR: "s",
    KEY: "key",
}


class ExpansionError(ArithmeticError):
    """A triangular basis change left a residual or met an inadmissible index."""


# ---------------------------------------------------------------------------
# compositions


def flat(a: Iterable[int]) -> Composition:
    return tuple(p for p in a if p != 0)


def sort(a: Iterable[int]) -> Composition:
    return tuple(sorted(flat(a), reverse=True))


def pad(a: Iterable[int], length: int) -> Composition:
    a = tuple(a)
    if len(a) > length:
        raise ValueError(f"cannot pad {a} to shorter length {length}")
    return a + (0,) * (length - len(a))


def is_partition(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return all(p >= 1 for p in lam) and all(x >= y for x, y in zip(lam, lam[1:]))


def partial_sums(a: Iterable[int]) -> list[int]:
    out, s = [], 0
    for p in a:
        s += p
        out.append(s)
    return out


def refines(beta: Iterable[int], alpha: Iterable[int]) -> bool:
    """True iff every partial sum of ``alpha`` is a partial sum of ``beta``
    and both have the same size."""
    sb, sa = partial_sums(beta), partial_sums(alpha)
    if (sb[-1] if sb else 0) != (sa[-1] if sa else 0):
        return False
    return set(sa) <= set(sb)


def prefix_geq(b: Iterable[int], a: Iterable[int]) -> bool:
    """Dominance in prefix sums: ``b_1+...+b_k >= a_1+...+a_k`` for every k."""
    b, a = tuple(b), tuple(a)
    if len(b) != len(a):
        raise ValueError(f"length mismatch: {b} vs {a}")
    return all(x >= y for x, y in zip(partial_sums(b), partial_sums(a)))


def refinements(alpha: Iterable[int]) -> Iterator[Composition]:
    """All strong compositions refining ``alpha``."""
    alpha = tuple(alpha)
    if not alpha:
        yield ()
        return
    head, rest = alpha[0], alpha[1:]
    for tail in refinements(rest):
        for piece in compositions_of(head):
            yield piece + tail


def compositions_of(n: int) -> Iterator[Composition]:
    """Strong compositions of ``n`` (one empty composition when n == 0)."""
    if n == 0:
        yield ()
        return
    for cuts in range(n):
        for positions in combinations(range(1, n), cuts):
            bounds = (0,) + positions + (n,)
            yield tuple(bounds[j + 1] - bounds[j] for j in range(len(bounds) - 1))


def weak_compositions(total: int, length: int) -> Iterator[Composition]:
    """Weak compositions of ``total`` with exactly ``length`` parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Composition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def increasing_composition(lam: Iterable[int], k: int) -> Composition:
    """The weakly increasing weak composition of length ``k`` sorting to ``lam``."""
    lam = tuple(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    return (0,) * (k - len(lam)) + tuple(reversed(lam))


def contains(d: Iterable[int], a: Iterable[int]) -> bool:
    d, a = tuple(d), tuple(a)
    return len(d) == len(a) and all(x >= y for x, y in zip(d, a))


def spread(beta: Composition, nvars: int) -> Iterator[Composition]:
    """Weak compositions of length ``nvars`` whose flattening is ``beta``."""
    for slots in combinations(range(nvars), len(beta)):
        b = [0] * nvars
        for slot, part in zip(slots, beta):
            b[slot] = part
        yield tuple(b)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Finitely supported map from exponent vectors of length ``nvars`` to
    nonzero integers.  Immutable; Python ints never overflow."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Composition, int] | Iterable[tuple[Composition, int]] = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Composition, int] = {}
        for exp, coef in items:
            exp = tuple(exp)
            if nvars is None:
                nvars = len(exp)
            elif len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have length {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            clean[exp] = clean.get(exp, 0) + int(coef)
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self._terms = {e: c for e, c in clean.items() if c != 0}
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Composition, int], nvars: int) -> "Polynomial":
        # exponents already validated; only drop zero coefficients
        p = cls.__new__(cls)
        p._terms = {e: c for e, c in terms.items() if c}
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def monomial(cls, exp: Iterable[int], coef: int = 1) -> "Polynomial":
        exp = tuple(exp)
        return cls({exp: coef}, len(exp))

    @property
    def terms(self) -> dict[Composition, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Composition]:
        return sorted(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._trusted(out, self.nvars)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return Polynomial._trusted(out, self.nvars)

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted({e: -c for e, c in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial._trusted({e: c * other for e, c in self._terms.items()}, self.nvars)
        self._check(other)
        out: dict[Composition, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._trusted(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def pad(self, nvars: int) -> "Polynomial":
        """Same polynomial viewed in ``nvars >= self.nvars`` variables."""
        return Polynomial({pad(e, nvars): c for e, c in self._terms.items()}, nvars)

    def swap_variables(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1} (1-indexed)."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(out, self.nvars)

    def is_symmetric(self) -> bool:
        return all(self.swap_variables(i) == self for i in range(1, self.nvars))

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, nvars={self.nvars})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c} x^({','.join(map(str, e))})" for e, c in sorted(self._terms.items()))

    @classmethod
    def from_text(cls, text: str, nvars: int | None = None) -> "Polynomial":
        """Parse the canonical ``coef x^(e1,...,en) + ...`` form."""
        text = text.strip()
        if text == "0":
            if nvars is None:
                raise ValueError("nvars is required to parse the zero polynomial")
            return cls.zero(nvars)
        terms = []
        for chunk in text.replace("- ", "+ -").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            coef, _, rest = chunk.partition("x^")
            coef = coef.replace("*", "").strip()
            c = int(coef) if coef not in ("", "-") else (-1 if coef == "-" else 1)
            exp = tuple(int(v) for v in rest.strip().strip("()").split(",") if v.strip())
            terms.append((exp, c))
        return cls(terms, nvars)


# ---------------------------------------------------------------------------
# expansions


class BasisExpansion:
    """Integer combination of basis elements, tagged with the basis name."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping[Composition, int] | Iterable[tuple[Composition, int]] = ()):
        if basis not in BASIS_SYMBOL:
            raise ValueError(f"unknown basis {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Composition, int] = {}
        for idx, coef in items:
            idx = tuple(idx)
            _check_index(basis, idx)
            clean[idx] = clean.get(idx, 0) + int(coef)
        self.basis = basis
        self._terms = {k: v for k, v in clean.items() if v != 0}

    @property
    def terms(self) -> dict[Composition, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, idx) -> int:
        return self._terms.get(tuple(idx), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def __add__(self, other: "BasisExpansion") -> "BasisExpansion":
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return BasisExpansion(self.basis, out)

    def __sub__(self, other: "BasisExpansion") -> "BasisExpansion":
        return self + other.scale(-1)

    def scale(self, c: int) -> "BasisExpansion":
        return BasisExpansion(self.basis, {k: v * c for k, v in self._terms.items()})

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __repr__(self) -> str:
        return f"BasisExpansion({self.basis}, {self.to_text()!r})"

    def to_text(self) -> str:
        """One-line form, e.g. ``1*key(3,1,0,1) + 1*key(3,2,0,0)``."""
        if not self._terms:
            return "0"
        sym = BASIS_SYMBOL[self.basis]
        out = ""
        for k, (idx, c) in enumerate(self.items()):
            term = f"{abs(c)}*{sym}({','.join(map(str, idx))})"
            if k == 0:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out

    def to_lines(self) -> list[str]:
        sym = BASIS_SYMBOL[self.basis]
        return [f"{c} * {sym}({','.join(map(str, idx))})" for idx, c in self.items()]

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"index": list(idx), "coef": c} for idx, c in self.items()],
        }

    def to_json(self, **header) -> str:
        doc = dict(header)
        doc.update(self.to_dict())
        return json.dumps(doc)

    @classmethod
    def from_dict(cls, doc: Mapping) -> "BasisExpansion":
        return cls(doc["basis"], [(tuple(t["index"]), t["coef"]) for t in doc["terms"]])


def _check_index(basis: str, idx: Composition) -> None:
    if any(p < 0 for p in idx):
        raise ValueError(f"negative part in index {idx}")
    if basis == SCHUR and not is_partition(idx):
        raise ValueError(f"Schur index {idx} is not a partition")
    if basis == FUNDAMENTAL_F and any(p == 0 for p in idx):
        raise ValueError(f"F index {idx} is not a strong composition")


def polynomial_to_expansion(p: Polynomial) -> BasisExpansion:
    return BasisExpansion(MONOMIAL, p.terms)


# ---------------------------------------------------------------------------
# fundamental families


def fundamental_F(alpha: Iterable[int], nvars: int) -> Polynomial:
    """Fundamental quasisymmetric function truncated to ``nvars`` variables."""
    alpha = tuple(alpha)
    terms = {}
    for beta in refinements(alpha):
        if len(beta) > nvars:
            continue
        for b in spread(beta, nvars):
            terms[b] = 1
    return Polynomial(terms, nvars)


def fundamental_slide(a: Iterable[int]) -> Polynomial:
    """Fundamental slide polynomial in ``len(a)`` variables."""
    a = tuple(a)
    n = len(a)
    terms = {}
    for beta in refinements(flat(a)):
        if len(beta) > n:
            continue
        for b in spread(beta, n):
            if prefix_geq(b, a):
                terms[b] = 1
    return Polynomial(terms, n)


_slide_cache: dict[Composition, Polynomial] = {}


def slide(a: Iterable[int]) -> Polynomial:
    """Memoized :func:`fundamental_slide`."""
    a = tuple(a)
    p = _slide_cache.get(a)
    if p is None:
        p = _slide_cache[a] = fundamental_slide(a)
    return p


def slide_sum(indices: Iterable[Composition | None], nvars: int) -> Polynomial:
    """Sum of slide polynomials; virtual indices contribute zero."""
    out: dict[Composition, int] = {}
    for a in indices:
        if a is VIRTUAL:
            continue
        for e, c in slide(a).items():
            out[e] = out.get(e, 0) + c
    return Polynomial(out, nvars)


def F_sum(indices: Iterable[Composition], nvars: int) -> Polynomial:
    out: dict[Composition, int] = {}
    cache: dict[Composition, Polynomial] = {}
    for alpha in indices:
        if alpha not in cache:
            cache[alpha] = fundamental_F(alpha, nvars)
        for e, c in cache[alpha].items():
            out[e] = out.get(e, 0) + c
    return Polynomial(out, nvars)


# ---------------------------------------------------------------------------
# triangular basis change


def _triangular(p: Polynomial, basis_poly, basis: str) -> BasisExpansion:
    # Lexicographic order extends the prefix order, so the lex-least surviving
    # exponent is always prefix-minimal.
    residual = dict(p.items())
    coeffs: dict[Composition, int] = {}
    while residual:
        a = min(residual)
        c = residual[a]
        q = basis_poly(a)
        lead = q.coefficient(a)
        if lead != 1:
            raise ExpansionError(f"{basis} element {a} does not have leading coefficient 1")
        coeffs[a] = c
        for e, v in q.items():
            if e < a:
                raise ExpansionError(f"{basis} element {a} has a term {e} below its index")
            nv = residual.get(e, 0) - c * v
            if nv:
                residual[e] = nv
            else:
                residual.pop(e, None)
    return BasisExpansion(basis, coeffs)


def expand_in_slide(p: Polynomial) -> BasisExpansion:
    return _triangular(p, slide, SLIDE)


def expand_in_key(p: Polynomial) -> BasisExpansion:
    """Possibly signed key expansion of ``p`` by triangular subtraction."""
    from .bases import key_poly

    return _triangular(p, key_poly, KEY)


def expand_in_schur(p: Polynomial) -> BasisExpansion:
    if not p.is_symmetric():
        raise ExpansionError("polynomial is not symmetric")
    out = {}
    for a, c in expand_in_key(p).items():
        if any(x > y for x, y in zip(a, a[1:])):
            raise ExpansionError(f"key index {a} is not weakly increasing")
        out[sort(a)] = c
    return BasisExpansion(SCHUR, out)


def realize(expansion: BasisExpansion, nvars: int) -> Polynomial:
    """Sum the basis polynomials of ``expansion`` in ``nvars`` variables."""
    from .bases import key_poly, schur_poly

    total = Polynomial.zero(nvars)
    for idx, c in expansion.items():
        if expansion.basis == MONOMIAL:
            q = Polynomial.monomial(pad(idx, nvars))
        elif expansion.basis == FUNDAMENTAL_F:
            q = fundamental_F(idx, nvars)
        elif expansion.basis == SLIDE:
            q = slide(idx).pad(nvars)
        elif expansion.basis == KEY:
            q = key_poly(idx).pad(nvars)
        else:
            q = schur_poly(idx, nvars)
        total = total + q * c
    return total


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q
