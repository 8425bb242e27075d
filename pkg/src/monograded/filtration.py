"""Invariants of the I-adic filtration of an m-primary monomial ideal.

The ambient polynomial ring is read as a local ring at the origin.  Ratliff-Rush
closures are colon-stabilizations inside the monomial world; reduction numbers
are decided by certified truncated linear algebra (sound in both directions by
Nakayama); the associated graded and fiber cone series are reconstructed
exactly from finitely many length/generator counts with a verified polynomial
tail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import CertificateFailed, ComputationError, NotAReduction
from .hilbert import (
    HilbertData,
    HilbertSeries,
    hilbert_data_from_series,
    reconstruct_series,
)
from .monomials import MonomialIdeal
from .truncation import (
    PolyElement,
    TruncatedAlgebra,
    certified_truncation,
    ideal_image,
    monomial_image_dim,
    poly_product_generators,
)


@dataclass
class Reduction:
    """A candidate minimal reduction: d seeded generic combinations of the
    minimal generators, with integer coefficients in [1, coeff_bound]."""

    gens: list[PolyElement]
    seed: int
    coeff_bound: int

    @property
    def size(self) -> int:
        return len(self.gens)


class PowerCache:
    """Successive powers of an ideal and their colengths, computed once."""

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        self._powers = [MonomialIdeal.unit(ideal.k, ideal.names)]
        self._lengths: list[int] = [0]

    def power(self, n: int) -> MonomialIdeal:
        while len(self._powers) <= n:
            self._powers.append(self._powers[-1] * self.ideal)
        return self._powers[n]

    def colength(self, n: int) -> int:
        while len(self._lengths) <= n:
            self._lengths.append(self.power(len(self._lengths)).quotient_length())
        return self._lengths[n]


@lru_cache(maxsize=512)
def power_cache(ideal: MonomialIdeal) -> PowerCache:
    """Shared per-ideal cache of powers and colengths."""
    return PowerCache(ideal)


def ratliff_rush(ideal: MonomialIdeal, power: int = 1, max_steps: int = 64) -> MonomialIdeal:
    """Ratliff-Rush closure of I^power: the stable value of (I^(power+n) : I^n).

    The chain is increasing for m-primary I, so one repeat is already stable;
    a second consecutive equality is kept as a belt-and-braces check.
    """
    cache = power_cache(ideal)
    current = cache.power(power)
    for n in range(1, max_steps):
        nxt = cache.power(power + n).colon(cache.power(n))
        if nxt == current:
            confirm = cache.power(power + n + 1).colon(cache.power(n + 1))
            if confirm == current:
                return current
        current = nxt
    raise ComputationError(f"Ratliff-Rush chain did not stabilize in {max_steps} steps")


def h0_G(ideal: MonomialIdeal, n: int) -> int:
    """ell of the degree-n piece of H^0 of the associated graded ring:
    ell((I^n intersect rr(I^(n+1))) / I^(n+1))."""
    cache = power_cache(ideal)
    inner = cache.power(n).intersection(ratliff_rush(ideal, n + 1))
    return cache.power(n + 1).quotient_length() - inner.quotient_length()


def gamma_positive(ideal: MonomialIdeal, upto: int) -> bool:
    """Whether h^0(G)_n vanishes for 0 <= n <= upto (the depth G_+ >= 1 gate)."""
    return all(h0_G(ideal, n) == 0 for n in range(upto + 1))


def multiplicity_samuel(ideal: MonomialIdeal, n_bound: int | None = None) -> int:
    """Hilbert-Samuel multiplicity from the colength sequence ell(R/I^n).

    The d-th finite differences must take one value on d+2 consecutive windows
    and that value must survive two further verification points.
    """
    d = ideal.k
    if n_bound is None:
        n_bound = 6 * d + 14
    cache = power_cache(ideal)
    values = [cache.colength(0), cache.colength(1)]
    while len(values) <= n_bound:
        values.append(cache.colength(len(values)))
        diffs = values
        for _ in range(d):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        if len(diffs) >= 4 and len(set(diffs[-4:])) == 1:
            e = diffs[-1]
            if e <= 0:
                raise ComputationError("stabilized leading difference is not positive")
            return e
    raise ComputationError(f"colength differences did not stabilize below n = {n_bound}")


def mu(ideal: MonomialIdeal, n: int) -> int:
    """Minimal number of generators of I^n."""
    return power_cache(ideal).power(n).num_generators()


def fiber_cone_series(ideal: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of the fiber cone, reconstructed from the mu(I^n) counts."""
    cache = power_cache(ideal)
    return reconstruct_series(lambda n: cache.power(n).num_generators(), ideal.k)


def G_hilbert_data(ideal: MonomialIdeal) -> HilbertData:
    """Hilbert data of the associated graded ring, reconstructed from the
    colength differences ell(I^n / I^(n+1))."""
    cache = power_cache(ideal)
    series = reconstruct_series(
        lambda n: cache.colength(n + 1) - cache.colength(n), ideal.k
    )
    return hilbert_data_from_series(series)


# -- reductions ---------------------------------------------------------


def minimal_reduction(ideal: MonomialIdeal, seed: int, coeff_bound: int = 100) -> Reduction:
    """d = k seeded generic integer combinations of the minimal generators.

    In one variable the minimal-degree generator itself is the reduction."""
    gens = ideal.minimal_generators()
    if ideal.k == 1:
        return Reduction([PolyElement.from_monomial(gens[0])], seed, coeff_bound)
    rng = random.Random(seed)
    combos = []
    for _ in range(ideal.k):
        coeffs = [rng.randint(1, coeff_bound) for _ in gens]
        combos.append(PolyElement.combination(gens, coeffs))
    return Reduction(combos, seed, coeff_bound)


def reduction_number_wrt(
    reduction: Reduction,
    ideal: MonomialIdeal,
    n_bound: int | None = None,
    extra_truncation: int = 0,
) -> int:
    """Least n with J*I^n = I^(n+1), decided inside a certified truncation.

    For each n the truncation degree is the least t with m^t inside I^(n+1)
    (exact, by monomial membership).  Image equality at that truncation forces
    I^(n+1) inside J*I^n + m*I^(n+1), hence equality by Nakayama; a failed
    equality is conclusive because J*I^n always sits inside I^(n+1).
    """
    if n_bound is None:
        n_bound = multiplicity_samuel(ideal) + 2
    cache = power_cache(ideal)
    for n in range(n_bound + 1):
        nxt = cache.power(n + 1)
        t = nxt.smallest_contained_m_power() + extra_truncation
        algebra = TruncatedAlgebra(ideal.k, t)
        target = monomial_image_dim(nxt, t)
        jin = poly_product_generators(reduction.gens, cache.power(n))
        image = ideal_image(jin, algebra, target_dim=target)
        if image.dim == target:
            return n
    raise NotAReduction(f"not a reduction within n <= {n_bound}")


def reduction_number(
    ideal: MonomialIdeal,
    trials: int = 5,
    seed: int = 0,
    coeff_bound: int = 100,
    n_bound: int | None = None,
    resamples: int = 4,
) -> tuple[int, list[dict]]:
    """Minimum of r_J over seeded candidate reductions.

    Sampling genericity: correct with high probability over the rationals, and
    each candidate that fails the n-bound is resampled a bounded number of
    times before the trial errors out.
    """
    if n_bound is None:
        n_bound = multiplicity_samuel(ideal) + 2
    trials_out = []
    best = None
    for trial in range(trials):
        r = None
        for attempt in range(resamples + 1):
            trial_seed = seed * 1_000_003 + trial * 1_009 + attempt
            candidate = minimal_reduction(ideal, trial_seed, coeff_bound)
            try:
                r = reduction_number_wrt(candidate, ideal, n_bound=n_bound)
            except NotAReduction:
                continue
            trials_out.append({"seed": trial_seed, "r": r})
            break
        if r is None:
            raise NotAReduction(
                f"trial {trial}: no reduction found in {resamples + 1} samples"
            )
        best = r if best is None else min(best, r)
    return best, trials_out


def monomial_reduction_number(
    ideal: MonomialIdeal, monomial_reduction: MonomialIdeal, n_bound: int = 64
) -> int:
    """Brute-force oracle for monomial reductions J: compare J*I^n with I^(n+1)
    generator-by-generator, entirely inside the monomial world."""
    cache = power_cache(ideal)
    for n in range(n_bound + 1):
        if monomial_reduction * cache.power(n) == cache.power(n + 1):
            return n
    raise NotAReduction(f"not a reduction within n <= {n_bound}")


def reduction_colength(reduction: Reduction, k: int, max_t: int = 40) -> int:
    """ell(R/J) through a certified truncation of J."""
    t, _ = certified_truncation(reduction.gens, k, max_t)
    algebra = TruncatedAlgebra(k, t - 1)
    image = ideal_image(reduction.gens, algebra)
    return algebra.dimension - image.dim


# -- Valabrega-Valla certificate and the a-invariant of G -------------------


def _certified_t(gens, k: int, floor: int, cap: int) -> int:
    """Truncation certificate with an adaptive first attempt."""
    try:
        t, _ = certified_truncation(gens, k, min(floor + 4, cap))
        return t
    except ComputationError:
        t, _ = certified_truncation(gens, k, cap)
        return t


def vv_cm_certificate(
    ideal: MonomialIdeal,
    reduction: Reduction,
    r: int | None = None,
    max_truncation: int | None = None,
) -> bool:
    """Valabrega-Valla test: I^n intersect J = J*I^(n-1) for 1 <= n <= r_J + 1.

    Certifies Cohen-Macaulayness of the associated graded ring; for n beyond
    r_J the equality is automatic.  Each level is decided exactly: with m^t
    inside J*I^(n-1) the three subspace dimensions at truncation t - 1 pin the
    ideal-level intersection down.
    """
    if r is None:
        r = reduction_number_wrt(reduction, ideal)
    cache = power_cache(ideal)
    max_deg = max(g.degree for g in ideal.gens)
    for n in range(1, r + 2):
        prod_gens = poly_product_generators(reduction.gens, cache.power(n - 1))
        cap = max_truncation or max(max_deg * (n + 2), 8)
        floor = cache.power(n).smallest_contained_m_power()
        t = _certified_t(prod_gens, ideal.k, floor, cap)
        algebra = TruncatedAlgebra(ideal.k, t - 1)
        power_n = cache.power(n)
        dim_power = monomial_image_dim(power_n, t - 1)
        dim_j = ideal_image(reduction.gens, algebra).dim
        dim_sum = ideal_image(reduction.gens, algebra, seed_ideal=power_n).dim
        dim_prod = ideal_image(prod_gens, algebra).dim
        if dim_power + dim_j - dim_sum != dim_prod:
            return False
    return True


def a_G_if_CM(ideal: MonomialIdeal, reduction: Reduction, r: int | None = None) -> int:
    """a-invariant of the associated graded ring, valid only under the
    Valabrega-Valla certificate: deg of the reduced G-numerator minus dim."""
    if not vv_cm_certificate(ideal, reduction, r=r):
        raise CertificateFailed("Valabrega-Valla certificate does not hold")
    data = G_hilbert_data(ideal)
    q, d = data.series.reduced()
    return (len(q) - 1) - d


# -- assembled report ---------------------------------------------------


@dataclass
class FiltrationReport:
    """Everything the reduction CLI reports for one ideal."""

    ideal: MonomialIdeal
    multiplicity: int
    colengths: list[int]
    ratliff_rush: list[str]
    mu_table: list[int]
    h0_table: list[int]
    g_numerator: list[int]
    reduction_trials: list[dict]
    reduction_number: int
    vv_certificate: bool
    a_G: int | None

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.format(),
            "e": self.multiplicity,
            "colengths": self.colengths,
            "ratliff_rush": self.ratliff_rush,
            "mu": self.mu_table,
            "h0_G": self.h0_table,
            "G_numerator": self.g_numerator,
            "trials": self.reduction_trials,
            "r": self.reduction_number,
            "vv_certificate": self.vv_certificate,
            "a_G": self.a_G,
        }


def filtration_report(
    ideal: MonomialIdeal,
    trials: int = 3,
    seed: int = 0,
    coeff_bound: int = 100,
    n_bound: int | None = None,
    powers: int = 4,
    max_truncation: int | None = None,
) -> FiltrationReport:
    e = multiplicity_samuel(ideal)
    cache = power_cache(ideal)
    r, trial_list = reduction_number(
        ideal, trials=trials, seed=seed, coeff_bound=coeff_bound, n_bound=n_bound
    )
    best = min(trial_list, key=lambda tr: tr["r"])
    candidate = minimal_reduction(ideal, best["seed"], coeff_bound)
    certified = vv_cm_certificate(
        ideal, candidate, r=best["r"], max_truncation=max_truncation
    )
    return FiltrationReport(
        ideal=ideal,
        multiplicity=e,
        colengths=[cache.colength(n) for n in range(powers + 1)],
        ratliff_rush=[ratliff_rush(ideal, n).format() for n in range(1, powers + 1)],
        mu_table=[mu(ideal, n) for n in range(1, powers + 1)],
        h0_table=[h0_G(ideal, n) for n in range(powers)],
        g_numerator=G_hilbert_data(ideal).series.numerator,
        reduction_trials=trial_list,
        reduction_number=r,
        vv_certificate=certified,
        a_G=a_G_if_CM(ideal, candidate, r=best["r"]) if certified else None,
    )
