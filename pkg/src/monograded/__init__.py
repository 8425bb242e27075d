"""Exact invariants of monomial-ideal quotients and numerical semigroup rings.

The toolkit computes Hilbert series, graded local cohomology lengths,
a-invariants, Eisenbud-Goto invariants, Ratliff-Rush closures, and reduction
numbers, and verifies the inequalities relating them on concrete and seeded
random instances.  All arithmetic is exact.
"""

from .monomials import Monomial, MonomialIdeal, parse_ideal, parse_monomial
from .hilbert import (
    HilbertData,
    HilbertSeries,
    codim,
    hilbert_data,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    krull_dim,
    multiplicity,
    serre_difference,
)
from .cohomology import (
    CohomologyTable,
    OrthantClass,
    a_invariant,
    cech_class_cohomology,
    cohomology_table,
    depth,
    eg_invariant,
    h,
)
from .truncation import (
    IdealSubspace,
    PolyElement,
    TruncatedAlgebra,
    certified_truncation,
    contains_mod,
    ideal_equal_mod,
    subspace_length_between,
)
from .filtration import (
    FiltrationReport,
    Reduction,
    G_hilbert_data,
    a_G_if_CM,
    fiber_cone_series,
    h0_G,
    minimal_reduction,
    mu,
    multiplicity_samuel,
    ratliff_rush,
    reduction_number,
    reduction_number_wrt,
    vv_cm_certificate,
)
from .semigroup import (
    NumericalSemigroup,
    SemigroupIdeal,
    colon_sg,
    ideal_power_sg,
    ideal_product_sg,
    length_sg,
    multiplicity_sg,
    reduction_number_sg,
    rr_sg,
)
from .bounds import (
    BoundReport,
    run_corpus,
    verify_eg_inequality,
    verify_main_bound,
    verify_prop_3_1,
    verify_prop_3_3,
    verify_prop_3_4,
)

__version__ = "0.1.0"
