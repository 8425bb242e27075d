"""Hilbert series of monomial quotients by pivot divide-and-conquer.

The series of R/I is computed exactly as N(lambda)/(1-lambda)^k from the short
exact sequence 0 -> R/(I:p) -> R/I -> R/(I+(p)) -> 0 for a pivot monomial p,
with the pairwise-coprime product formula as base case.  From the reduced form
Q(lambda)/(1-lambda)^d we read off dimension, multiplicity, the Hilbert
polynomial, and the Serre difference H(n) - P(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import ZeroRing, ReconstructionFailed
from .monomials import Monomial, MonomialIdeal

# -- integer polynomials as coefficient lists (zero polynomial = []) -----


def pstrip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    return pstrip([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return pstrip(out)


def pshift(p, s: int):
    return [0] * s + list(p) if p else []


def peval_one(p) -> int:
    return sum(p)


def pdiv_one_minus(p):
    """Divide by (1 - lambda); requires p(1) == 0."""
    if not p:
        return []
    acc = 0
    out = []
    for c in p[:-1]:
        acc += c
        out.append(acc)
    if acc + p[-1] != 0:
        raise ValueError("polynomial not divisible by (1 - lambda)")
    return pstrip(out)


def one_minus_lambda_power(d: int) -> list[int]:
    return [(-1) ** i * comb(d, i) for i in range(d + 1)]


# -- series -------------------------------------------------------------


class HilbertSeries:
    """N(lambda)/(1-lambda)^k with cached reduced form Q(lambda)/(1-lambda)^d."""

    __slots__ = ("k", "numerator", "_reduced")

    def __init__(self, k: int, numerator: list[int]):
        self.k = k
        self.numerator = pstrip(list(numerator))
        self._reduced = None

    @property
    def is_zero_ring(self) -> bool:
        return not self.numerator

    def reduced(self) -> tuple[list[int], int]:
        """(Q, d) with N = Q * (1-lambda)^(k-d) and Q(1) != 0."""
        if self._reduced is None:
            if self.is_zero_ring:
                raise ZeroRing("zero ring has no reduced Hilbert series")
            q = list(self.numerator)
            cancelled = 0
            while peval_one(q) == 0:
                q = pdiv_one_minus(q)
                cancelled += 1
            if cancelled > self.k:
                raise ValueError("numerator has more (1-lambda) factors than the ring allows")
            self._reduced = (q, self.k - cancelled)
        return self._reduced

    @property
    def reduced_numerator(self) -> list[int]:
        return list(self.reduced()[0])

    @property
    def dim(self) -> int:
        return self.reduced()[1]

    @property
    def multiplicity(self) -> int:
        return peval_one(self.reduced()[0])

    def coefficient(self, n: int) -> int:
        """Coefficient of lambda^n in the expansion of N/(1-lambda)^k."""
        if n < 0:
            return 0
        if self.k == 0:
            return self.numerator[n] if n < len(self.numerator) else 0
        return sum(
            c * comb(n - i + self.k - 1, self.k - 1)
            for i, c in enumerate(self.numerator)
            if i <= n
        )

    @property
    def postulation_degree(self) -> int:
        """H(n) = P(n) for all n strictly above deg Q - d."""
        q, d = self.reduced()
        return len(q) - 1 - d

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.k == other.k
            and self.numerator == other.numerator
        )

    def __repr__(self):
        return f"HilbertSeries({format_poly(self.numerator)}) / (1-l)^{self.k}"


def format_poly(p, var: str = "l") -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            base = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append(f"-{base}")
            else:
                parts.append(f"{c}*{base}")
    return " + ".join(parts).replace("+ -", "- ")


# -- the divide-and-conquer recursion -------------------------------------


def _pairwise_coprime(gens: list[Monomial]) -> bool:
    masks = []
    for g in gens:
        m = 0
        for j, e in enumerate(g.exps):
            if e:
                m |= 1 << j
        masks.append(m)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                return False
    return True


def _pivot_frequent(gens: list[Monomial], k: int) -> Monomial:
    """Most frequent variable among non-pure-power generators, at the minimal
    positive exponent it takes there."""
    mixed = [g for g in gens if g.pure_power_variable is None and not g.is_one]
    counts = [0] * k
    for g in mixed:
        for j, e in enumerate(g.exps):
            if e:
                counts[j] += 1
    j = max(range(k), key=lambda i: (counts[i], -i))
    e = min(g.exps[j] for g in mixed if g.exps[j] > 0)
    return Monomial(tuple(e if i == j else 0 for i in range(k)))


def _pivot_lexfirst(gens: list[Monomial], k: int) -> Monomial:
    """Smallest-index variable occurring in a non-pure-power generator."""
    mixed = [g for g in gens if g.pure_power_variable is None and not g.is_one]
    j = min(min(g.support) for g in mixed)
    e = min(g.exps[j] for g in mixed if g.exps[j] > 0)
    return Monomial(tuple(e if i == j else 0 for i in range(k)))


_PIVOTS = {"frequent": _pivot_frequent, "lexfirst": _pivot_lexfirst}


def _numerator(k: int, gens: frozenset[Monomial], memo: dict, pivot) -> list[int]:
    cached = memo.get(gens)
    if cached is not None:
        return cached
    gen_list = sorted(gens, key=lambda m: (m.degree, m.exps))
    if _pairwise_coprime(gen_list):
        result = [1]
        for g in gen_list:
            result = pmul(result, padd([1], pshift([-1], g.degree)))
    else:
        p = pivot(gen_list, k)
        plus = MonomialIdeal(k, set(gens) | {p})
        colon = MonomialIdeal(k, {g.colon(p) for g in gens})
        result = padd(
            _numerator(k, plus.gens, memo, pivot),
            pshift(_numerator(k, colon.gens, memo, pivot), p.degree),
        )
    memo[gens] = result
    return result


def hilbert_series(ideal: MonomialIdeal, strategy: str = "frequent") -> HilbertSeries:
    """Exact Hilbert series of R/I.  The unit ideal yields the flagged zero-ring
    series with numerator 0."""
    if ideal.is_unit:
        return HilbertSeries(ideal.k, [])
    memo: dict = {}
    return HilbertSeries(ideal.k, _numerator(ideal.k, ideal.gens, memo, _PIVOTS[strategy]))


# -- Hilbert polynomial and Serre difference -------------------------------


def binomial_poly(shift: int, m: int) -> list[Fraction]:
    """Coefficients in n of C(n + shift, m) = prod_{t=0}^{m-1} (n + shift - t) / m!."""
    coeffs = [Fraction(1)]
    for t in range(m):
        coeffs = _poly_mul_linear(coeffs, Fraction(shift - t))
    inv = Fraction(1, factorial(m))
    return [c * inv for c in coeffs]


def _poly_mul_linear(coeffs: list[Fraction], constant: Fraction) -> list[Fraction]:
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] += c * constant
    return out


def poly_value(coeffs, n: int) -> Fraction:
    acc = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        acc += c * power
        power *= n
    return acc


@dataclass
class HilbertData:
    """Series plus the derived numeric invariants of a monomial quotient."""

    series: HilbertSeries
    dim: int
    multiplicity: int
    hilbert_polynomial: tuple[Fraction, ...]

    def polynomial_value(self, n: int) -> int:
        value = poly_value(self.hilbert_polynomial, n)
        assert value.denominator == 1
        return int(value)


def hilbert_data_from_series(series: HilbertSeries) -> HilbertData:
    q, d = series.reduced()
    if d == 0:
        poly: tuple[Fraction, ...] = ()
    else:
        acc = [Fraction(0)] * d
        for i, c in enumerate(q):
            if c:
                for idx, coeff in enumerate(binomial_poly(d - 1 - i, d - 1)):
                    acc[idx] += c * coeff
        poly = tuple(acc)
    return HilbertData(series, d, peval_one(q), poly)


def hilbert_data(ideal: MonomialIdeal) -> HilbertData:
    if ideal.is_unit:
        raise ZeroRing("invariants of the zero ring are undefined")
    return hilbert_data_from_series(hilbert_series(ideal))


def hilbert_function(ideal: MonomialIdeal, n: int) -> int:
    """H(R/I, n), counted directly on standard monomials."""
    return ideal.graded_length(n)


def hilbert_polynomial(ideal: MonomialIdeal) -> tuple[Fraction, ...]:
    """Coefficients of the Hilbert polynomial P(n), lowest degree first
    (empty for dimension zero)."""
    return hilbert_data(ideal).hilbert_polynomial


def serre_difference(ideal: MonomialIdeal, n: int) -> int:
    """H(n) - P(n)."""
    data = hilbert_data(ideal)
    return hilbert_function(ideal, n) - data.polynomial_value(n)


def serre_difference_table(ideal: MonomialIdeal, lo: int, hi: int) -> dict[int, int]:
    data = hilbert_data(ideal)
    return {
        n: hilbert_function(ideal, n) - data.polynomial_value(n)
        for n in range(lo, hi + 1)
    }


def multiplicity(ideal: MonomialIdeal) -> int:
    return hilbert_data(ideal).multiplicity


def krull_dim(ideal: MonomialIdeal) -> int:
    return hilbert_data(ideal).dim


def codim(ideal: MonomialIdeal) -> int:
    return ideal.k - krull_dim(ideal)


# -- rational reconstruction of a series from initial values ----------------


def reconstruct_numerator(values: list[int], denom_power: int, tail_zeros: int = 3):
    """Numerator of sum(values[n] * lambda^n) * (1-lambda)^denom_power, or None.

    The values must be an initial segment of a sequence that is eventually
    polynomial of degree < denom_power; success requires the convolved
    coefficients to vanish on the last `tail_zeros` positions.
    """
    factor = one_minus_lambda_power(denom_power)
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v:
            for j, f in enumerate(factor):
                if i + j < len(values):
                    coeffs[i + j] += v * f
    if tail_zeros > len(values):
        return None
    if any(c != 0 for c in coeffs[len(values) - tail_zeros:]):
        return None
    return pstrip(coeffs)


def reconstruct_series(
    value_fn, k: int, tail_zeros: int = 3, verify_points: int = 2, max_terms: int = 64
) -> HilbertSeries:
    """Grow values value_fn(0..m) until the rational reconstruction stabilizes,
    then check the candidate against `verify_points` further values."""
    values: list[int] = []
    m = max(2 * k + 4, tail_zeros + 2)
    while len(values) <= max_terms:
        while len(values) < m:
            values.append(value_fn(len(values)))
        numerator = reconstruct_numerator(values, k, tail_zeros)
        if numerator is not None:
            series = HilbertSeries(k, numerator)
            if all(
                series.coefficient(len(values) + i) == value_fn(len(values) + i)
                for i in range(verify_points)
            ):
                return series
        m += 2
    raise ReconstructionFailed(
        f"series did not stabilize within {max_terms} terms"
    )
