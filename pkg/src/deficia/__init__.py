"""Search and proof-verification toolkit for exactly-k-deficient-perfect
and k-near-perfect numbers."""

from .classify import (
    ClassificationRecord,
    Side,
    SideMismatchError,
    Status,
    TargetZeroError,
    WitnessSet,
    classify_full,
    delta,
    witnesses_exact_k,
)
from .factor import (
    Factorization,
    divisor_list,
    factorize,
    is_perfect_square,
    is_prime,
    omega,
    sigma,
    tau,
)
from .search import (
    Checkpoint,
    SearchConfig,
    SearchHit,
    search_range,
    search_structured,
    sigma_sieve,
    verify_lemma1,
    verify_lemma2,
    verify_theorem,
)

__version__ = "0.1.0"
