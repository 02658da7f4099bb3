"""twep: worst-case verification and synthesis of two-way purification protocols.

Given n noisy shared pairs and the promise of at most t corrupted ones, a
protocol here adaptively measures commuting parity operators on both sides,
compares results, and must always end with at least k perfectly restored
pairs.  The package provides the symplectic Pauli algebra, the adaptive
execution engine, an exhaustive adversarial verifier, the classic small
protocols, a greedy protocol synthesizer, and the matching coding bounds.
"""

from ._kernels import kernel_backend
from .bounds import (
    BoundsRow,
    RatePoint,
    gv_k,
    hamming_max_k,
    mi_sequence,
    rate_table,
    singleton_max_k,
    thm2_k,
)
from .engine import (
    Discard,
    Finish,
    History,
    Measure,
    Report,
    Strategy,
    Transcript,
    simulate,
    verify,
)
from .errorspace import ErrorSet, count_errors, enumerate_errors, filter_by_outcome
from .pauli import PauliVec, multiply, parse, render, symplectic_product, weight
from .protocols import hamming_family, nine_pair, qutrit_four, six_pair
from .stabilizer import StabilizerSet, complete_discard, min_normalizer_weight, rank
from .synth import choose_generator, greedy_strategy, split_counts

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "Discard",
    "ErrorSet",
    "Finish",
    "History",
    "Measure",
    "PauliVec",
    "RatePoint",
    "Report",
    "StabilizerSet",
    "Strategy",
    "Transcript",
    "choose_generator",
    "complete_discard",
    "count_errors",
    "enumerate_errors",
    "filter_by_outcome",
    "greedy_strategy",
    "gv_k",
    "hamming_family",
    "hamming_max_k",
    "kernel_backend",
    "mi_sequence",
    "min_normalizer_weight",
    "multiply",
    "nine_pair",
    "parse",
    "qutrit_four",
    "rank",
    "rate_table",
    "render",
    "simulate",
    "singleton_max_k",
    "six_pair",
    "split_counts",
    "symplectic_product",
    "thm2_k",
    "verify",
    "weight",
]
