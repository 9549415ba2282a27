"""Exact k-deck computations and 3-deck determinacy on finite cyclic groups."""

from .cyclic import (
    CyclicSet,
    GcdClassTable,
    arith_profile,
    coprime_decomposition,
    divisors,
    gcd_class,
    translation_equivalent,
)
from .deck import (
    Deck,
    DeckBudgetError,
    IntFunction,
    deck,
    deck2_set,
    deck3_set,
    deck_fingerprint,
    deck_set,
    decks_equal,
)
from .spectrum import (
    IntPolynomial,
    SpectrumReport,
    a_x,
    cyclotomic,
    float_dft,
    ft_is_zero,
    gap,
    is_periodic,
    zero_set,
)
from .extendable import (
    AdditiveConstraintSystem,
    ExtendabilityVerdict,
    Witness,
    build_constraints,
    integer_kernel,
    is_extendable,
    linearity_check,
    smith_normal_form,
)
from .constructions import (
    CounterexamplePair,
    cosine_pair,
    even_pair,
    float_deck3,
    g_alpha,
    pqrd_pair,
    two_deck_pair,
)
from .analysis import (
    ClassificationReport,
    McReport,
    classify,
    determinacy_certificate,
    enumerate_translation_classes,
    exception_fraction,
    good_n_predicate,
    necklace_count,
    zero_probability_mc,
)

__version__ = "0.1.0"
