"""Machine-checkable case-analysis proofs.

`core` holds the four obligation checkers (interval certificates on
linear-fractional forms, residue-cycle contradictions, exact sign bounds,
and bounded exhaustive search); `runner` drives a ledger of case entries
and audits coverage; `ledger` ships the complete case decomposition
showing 1521 is the only odd number with two prime factors and exactly
three deficient divisors.
"""

from .core import (
    DEFAULT_EXPONENT_BOUND,
    Const,
    ExpEquation,
    Interval,
    MoebiusForm,
    Pow,
    PowTarget,
    Prod,
    Sum,
    UnsupportedFormError,
    Var,
    VarDomain,
    Verdict,
    VerdictStatus,
    abundancy_upper_bound,
    bounded_exponent_search,
    decimal_prefix,
    eval_bound_chain,
    moebius_interval_check,
    residue_cycle_check,
    sign_by_bounds,
    term,
)
from .ledger import SHIPPED_LEDGER, build_ledger
from .runner import (
    CaseEntry,
    ChainObligation,
    CofactorCut,
    IntervalObligation,
    LedgerResult,
    ResidueObligation,
    SearchObligation,
    SignObligation,
    cofactors_between,
    entry_from_json,
    entry_to_json,
    ledger_from_json,
    ledger_to_json,
    required_tags,
    run_case_ledger,
    run_entry,
)

__all__ = [
    "DEFAULT_EXPONENT_BOUND",
    "Const",
    "ExpEquation",
    "Interval",
    "MoebiusForm",
    "Pow",
    "PowTarget",
    "Prod",
    "Sum",
    "UnsupportedFormError",
    "Var",
    "VarDomain",
    "Verdict",
    "VerdictStatus",
    "abundancy_upper_bound",
    "bounded_exponent_search",
    "decimal_prefix",
    "eval_bound_chain",
    "moebius_interval_check",
    "residue_cycle_check",
    "sign_by_bounds",
    "term",
    "SHIPPED_LEDGER",
    "build_ledger",
    "CaseEntry",
    "ChainObligation",
    "CofactorCut",
    "IntervalObligation",
    "LedgerResult",
    "ResidueObligation",
    "SearchObligation",
    "SignObligation",
    "cofactors_between",
    "entry_from_json",
    "entry_to_json",
    "ledger_from_json",
    "ledger_to_json",
    "required_tags",
    "run_case_ledger",
    "run_entry",
]
