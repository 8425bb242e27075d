"""Certified finite-dimensional linear algebra in truncations S/m^(N+1).

Ideals with polynomial (possibly non-monomial) generators are represented by
the exact row-reduced span of their images in a truncated polynomial algebra.
The stabilization of ell(S/(A + m^t)) in t certifies m^t inside A by
Nakayama's lemma in the local ring at the origin, which makes equality,
containment, and relative-length answers conclusive for m-primary ideals.

All elimination is fraction-free over the integers; clearing denominators of
rational inputs does not change spans over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import ContainmentViolation, NotCertified
from .monomials import Monomial, MonomialIdeal, compositions, count_monomials_upto


class PolyElement:
    """A polynomial as a finitely supported map from exponent vectors to
    rational coefficients; zero coefficients are normalized away."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        clean = {}
        for exps, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> "PolyElement":
        return cls(m.k, {m.exps: coeff})

    @classmethod
    def combination(cls, monomials, coeffs) -> "PolyElement":
        terms: dict = {}
        k = monomials[0].k
        for m, c in zip(monomials, coeffs):
            terms[m.exps] = terms.get(m.exps, 0) + c
        return cls(k, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        return min(sum(e) for e in self.terms) if self.terms else 0

    def times_monomial(self, exps: tuple[int, ...]) -> "PolyElement":
        return PolyElement(
            self.k,
            {tuple(a + b for a, b in zip(t, exps)): c for t, c in self.terms.items()},
        )

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        terms: dict = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(t1, t2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return PolyElement(self.k, terms)

    def __add__(self, other: "PolyElement") -> "PolyElement":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            terms[t] = terms.get(t, 0) + c
        return PolyElement(self.k, terms)

    def __repr__(self):
        return f"PolyElement({self.terms})"


def poly_product_generators(polys, monomial_ideal: MonomialIdeal) -> list[PolyElement]:
    """Generators {p * g} of the product of (polys) with a monomial ideal."""
    return [p.times_monomial(g.exps) for p in polys for g in monomial_ideal.gens]


class TruncatedAlgebra:
    """S/m^(N+1) with its monomial basis in graded-lex order, so that degree
    truncation is a prefix of the column indexing."""

    __slots__ = ("k", "N", "monomials", "index", "degree_starts")

    def __init__(self, k: int, N: int):
        self.k = k
        self.N = N
        self.monomials: list[tuple[int, ...]] = []
        self.degree_starts = [0]
        for d in range(N + 1):
            block = sorted(compositions(d, k))
            self.monomials.extend(block)
            self.degree_starts.append(len(self.monomials))
        self.index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    def columns_below_degree(self, t: int) -> int:
        """Number of basis monomials of degree < t."""
        t = max(0, min(t, self.N + 1))
        return self.degree_starts[t]

    def row_of(self, poly: PolyElement) -> dict[int, int]:
        """Sparse integer row of the truncated image of poly (denominators cleared)."""
        entries: dict[int, Fraction | int] = {}
        for exps, coeff in poly.terms.items():
            col = self.index.get(exps)
            if col is not None:
                entries[col] = entries.get(col, 0) + coeff
        denom = 1
        for c in entries.values():
            if isinstance(c, Fraction):
                denom = denom * c.denominator // gcd(denom, c.denominator)
        row = {}
        for col, c in entries.items():
            v = int(c * denom)
            if v:
                row[col] = v
        return row


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    if row[min(row)] < 0:
        row = {c: -v for c, v in row.items()}
    return row


class Echelon:
    """A row space kept in sparse integer echelon form (pivot = least column)."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            pivot_row = self.pivots.get(c)
            if pivot_row is None:
                return row
            a, b = pivot_row[c], row[c]
            new = {}
            for col in row.keys() | pivot_row.keys():
                v = a * row.get(col, 0) - b * pivot_row.get(col, 0)
                if v:
                    new[col] = v
            row = new
        return row

    def add(self, row: dict[int, int]) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        row = _normalize(row)
        self.pivots[min(row)] = row
        return True

    def seed_unit_columns(self, cols) -> None:
        """Insert unit vectors; the caller guarantees they are new pivots."""
        for c in cols:
            self.pivots[c] = {c: 1}

    def contains(self, row: dict[int, int]) -> bool:
        return not self.reduce(row)

    def pivots_below(self, col_bound: int) -> int:
        return sum(1 for c in self.pivots if c < col_bound)


@dataclass
class IdealSubspace:
    """The image of an ideal in a truncated algebra, with an optional
    certificate `t` recording a machine-checked proof that m^t lies in it."""

    ambient: TruncatedAlgebra
    generators: list[PolyElement]
    echelon: Echelon = field(default_factory=Echelon)
    certificate: int | None = None

    @property
    def dim(self) -> int:
        return self.echelon.dim


def ideal_image(
    gens,
    algebra: TruncatedAlgebra,
    target_dim: int | None = None,
    seed_ideal: MonomialIdeal | None = None,
) -> IdealSubspace:
    """Row-reduced image of the ideal generated by `gens` in the truncation.

    Rows u*g are produced by ascending multiplier degree; with `target_dim` the
    build stops as soon as the span reaches that dimension.  A monomial
    `seed_ideal` contributes its truncated monomials directly as unit rows.
    """
    sub = IdealSubspace(algebra, list(gens))
    ech = sub.echelon
    if seed_ideal is not None:
        cols = [
            i
            for i, exps in enumerate(algebra.monomials)
            if seed_ideal.contains_monomial(Monomial(exps))
        ]
        ech.seed_unit_columns(cols)
    if target_dim is not None and ech.dim >= target_dim:
        return sub
    polys = [g if isinstance(g, PolyElement) else PolyElement.from_monomial(g) for g in gens]
    min_degs = [p.min_degree for p in polys]
    for deg_u in range(algebra.N + 1):
        live = [p for p, d in zip(polys, min_degs) if deg_u + d <= algebra.N]
        if not live:
            break
        for exps in compositions(deg_u, algebra.k):
            for p in live:
                if ech.add(algebra.row_of(p.times_monomial(exps))):
                    if target_dim is not None and ech.dim >= target_dim:
                        return sub
    return sub


def certified_truncation(gens, k: int, max_t: int):
    """Least t <= max_t with ell(S/(A+m^t)) = ell(S/(A+m^(t+1))), plus the proof
    data; the equality forces m^t inside A + m^(t+1) and hence inside A by
    Nakayama, provided A is m-primary (otherwise no t stabilizes).

    The truncation size is grown geometrically so that small certificates are
    found inside small algebras."""
    polys = [g if isinstance(g, PolyElement) else PolyElement.from_monomial(g) for g in gens]
    floor = max((p.min_degree for p in polys if not p.is_zero), default=1)
    attempt = min(max(4, floor + 2), max_t)
    while True:
        algebra = TruncatedAlgebra(k, attempt)
        sub = ideal_image(polys, algebra)
        lengths = [
            algebra.columns_below_degree(t)
            - sub.echelon.pivots_below(algebra.columns_below_degree(t))
            for t in range(attempt + 1)
        ]
        for t in range(1, attempt):
            if lengths[t] == lengths[t + 1]:
                return t, {"t": t, "stable_length": lengths[t]}
        if attempt >= max_t:
            raise NotCertified(f"no truncation certificate up to degree {max_t}")
        attempt = min(attempt * 2, max_t)


def ideal_equal_mod(a_gens, b_gens, k: int, N: int) -> bool:
    """Whether the two ideals have the same image in S/m^(N+1)."""
    algebra = TruncatedAlgebra(k, N)
    a = ideal_image(a_gens, algebra)
    b = ideal_image(b_gens, algebra)
    if a.dim != b.dim:
        return False
    return all(a.echelon.contains(row) for row in b.echelon.pivots.values())


def contains_mod(a_gens, b_gens, k: int, N: int) -> bool:
    """Whether the image of B lies inside the image of A in S/m^(N+1)."""
    algebra = TruncatedAlgebra(k, N)
    a = ideal_image(a_gens, algebra)
    b = ideal_image(b_gens, algebra)
    return all(a.echelon.contains(row) for row in b.echelon.pivots.values())


def subspace_length_between(a_gens, b_gens, k: int, N: int) -> int:
    """ell(A/B) for ideals B inside A, provided m^(N+1) lies in B."""
    algebra = TruncatedAlgebra(k, N)
    a = ideal_image(a_gens, algebra)
    b = ideal_image(b_gens, algebra)
    if not all(a.echelon.contains(row) for row in b.echelon.pivots.values()):
        raise ContainmentViolation("second ideal is not contained in the first")
    return a.dim - b.dim


def monomial_image_dim(ideal: MonomialIdeal, N: int) -> int:
    """Dimension of the image of a monomial ideal in S/m^(N+1): a count."""
    total = 0
    for d in range(N + 1):
        for exps in compositions(d, ideal.k):
            if ideal.contains_monomial(Monomial(exps)):
                total += 1
    return total
