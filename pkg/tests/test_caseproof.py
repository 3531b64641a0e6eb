"""Unit and property tests for the proof-obligation checkers: interval
certificates, residue cycles, sign bounds, bounded search, and the exact
interval arithmetic underneath."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deficia.caseproof import (
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
    VerdictStatus,
    bounded_exponent_search,
    decimal_prefix,
    eval_bound_chain,
    moebius_interval_check,
    residue_cycle_check,
    sign_by_bounds,
    term,
)
from deficia.caseproof.core import NEG_INF, POS_INF


# -- display helpers ---------------------------------------------------------


def test_decimal_prefix_truncates_never_rounds():
    assert decimal_prefix(Fraction(1, 3)) == "0.3333"
    assert decimal_prefix(Fraction(2, 3)) == "0.6666"  # not 0.6667
    assert decimal_prefix(Fraction(19999, 10000)) == "1.9999"
    assert decimal_prefix(Fraction(2)) == "2.0000"


def test_eval_bound_chain_is_exact():
    total, ok, prefix = eval_bound_chain(
        [Fraction(35, 24), Fraction(1, 5), Fraction(1, 7), Fraction(1, 25)]
    )
    assert total == Fraction(35, 24) + Fraction(1, 5) + Fraction(1, 7) + Fraction(1, 25)
    assert ok and total < 2
    assert prefix == "1.8411"


def test_bound_chain_comparison_ignores_display():
    # a sum whose 4-digit prefix is 1.9999 but which exceeds 2 must fail
    total, ok, prefix = eval_bound_chain([Fraction(2), Fraction(1, 10**9)])
    assert not ok
    total, ok, prefix = eval_bound_chain([Fraction(19999999, 10**7)])
    assert ok and prefix == "1.9999"


# -- interval arithmetic -----------------------------------------------------


def test_interval_with_infinities():
    half_line = Interval(Fraction(2), POS_INF)
    shifted = half_line + Interval(Fraction(-5), Fraction(-5))
    assert shifted.lo == Fraction(-3) and shifted.hi == POS_INF
    negated = half_line * Interval(Fraction(-1), Fraction(-1))
    assert negated.lo == NEG_INF and negated.hi == Fraction(-2)
    # infinity times an interval containing zero keeps zero finite
    z = Interval(Fraction(0), Fraction(0)) * half_line
    assert z.lo == 0 and z.hi == 0


def test_pow_bounds_negative_stride():
    dom = {"b": VarDomain("b", 1)}
    iv = Pow(5, "b", -2, 0).bounds(dom)  # 5^-2b for b >= 1
    assert iv.hi == Fraction(1, 25)
    assert iv.lo == Fraction(0)  # open-ended domain tends to 0


# -- interval certificates ---------------------------------------------------


def _simple_form(**kw):
    defaults = dict(a=47, b=-1, c=35, e=-81, base=47, stride=2, offset=0)
    defaults.update(kw)
    return MoebiusForm(**defaults)


def test_moebius_check_refutes_empty_intersection():
    # F decreasing from F(47^2) toward 47/35; powers of 27*3^2k live at
    # 3, 27, ... none inside (1, 2)
    verdict = moebius_interval_check(
        _simple_form(), Fraction(1), Fraction(2),
        PowTarget(3, 2, -3, vmin=2), "t",
    )
    assert verdict.status is VerdictStatus.PROVED


def test_moebius_check_candidates_reported():
    # contains the attainable value 3: cannot conclude
    verdict = moebius_interval_check(
        _simple_form(), Fraction(1), Fraction(4),
        PowTarget(3, 2, -3, vmin=2), "t",
    )
    assert verdict.status is VerdictStatus.INCONCLUSIVE
    assert Fraction(3) in verdict.candidates


def test_moebius_check_rejects_value_outside_interval():
    # an F(vmin) outside the declared interval is an unsound claim
    verdict = moebius_interval_check(
        _simple_form(), Fraction(5), Fraction(9),
        PowTarget(3, 2, -3, vmin=2), "t",
    )
    assert verdict.status is not VerdictStatus.PROVED


def test_moebius_denominator_sign_flip_rejected():
    # denominator x - 100 changes sign across x = 47, 47^3, ...
    form = MoebiusForm(a=1, b=0, c=1, e=-100, base=47, stride=2, offset=-1)
    with pytest.raises(UnsupportedFormError):
        moebius_interval_check(form, Fraction(0), Fraction(1),
                               PowTarget(3, 2, 0, vmin=1), "t")


@given(
    a=st.integers(1, 60), b=st.integers(-90, -1),
    c=st.integers(1, 60), e=st.integers(-90, -1),
    base=st.sampled_from([5, 7, 11, 13]),
    exp_off=st.sampled_from([-1, 0, 1]),
)
@settings(max_examples=300, deadline=None)
def test_moebius_soundness_property(a, b, c, e, base, exp_off):
    """Whenever the checker says PROVED for an interval that genuinely
    brackets the range of F, no small exponent pair may solve
    3^(2u-1) = F(base^(2v+off))."""
    form = MoebiusForm(a=a, b=b, c=c, e=e, base=base, stride=2, offset=exp_off)
    target = PowTarget(3, 2, -1, vmin=1)
    try:
        lows = [form.value(v) for v in range(1, 6)]
    except ZeroDivisionError:
        return
    lo = min(lows) - 1
    hi = max(lows) + 1
    try:
        verdict = moebius_interval_check(form, lo, hi, target, "t")
    except UnsupportedFormError:
        return
    if verdict.status is VerdictStatus.PROVED:
        for u in range(1, 6):
            y = Fraction(3) ** (2 * u - 1)
            for v in range(1, 6):
                assert form.value(v) != y, (a, b, c, e, base, u, v)


# -- residue cycles ----------------------------------------------------------


def test_residue_check_proves_no_root():
    # 3^a + 1 is never divisible by 3; residues mod 3 cycle
    eq = ExpEquation(Sum((Pow(3, "a", 1, 1), Const(Fraction(1)))),
                     (VarDomain("a", 0),))
    v = residue_cycle_check(eq, 3, "t")
    assert v.status is VerdictStatus.PROVED


def test_residue_check_refutes_on_root():
    # 2^a - 4 = 0 at a = 2; mod 7 the root is visible
    eq = ExpEquation(Sum((Pow(2, "a", 1, 0), Const(Fraction(-4)))),
                     (VarDomain("a", 0),))
    v = residue_cycle_check(eq, 7, "t")
    assert v.status is VerdictStatus.REFUTED


@given(
    c1=st.integers(1, 50), c2=st.integers(1, 50),
    a0=st.integers(0, 6), b0=st.integers(0, 6),
    m=st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27, 49]),
)
@settings(max_examples=300, deadline=None)
def test_residue_check_never_contradicts_planted_root(c1, c2, a0, b0, m):
    """Plant an exact root and confirm the checker can never claim PROVED."""
    offset = -(c1 * 3**a0 + c2 * 5**b0)
    eq = ExpEquation(
        Sum((term(c1, Pow(3, "a")), term(c2, Pow(5, "b")),
             Const(Fraction(offset)))),
        (VarDomain("a", 0), VarDomain("b", 0)),
    )
    v = residue_cycle_check(eq, m, "t")
    assert v.status is not VerdictStatus.PROVED


def test_residue_check_rejects_free_variables():
    eq = ExpEquation(Sum((Var("d"), Const(Fraction(-1)))),
                     (VarDomain("d", 1),))
    with pytest.raises(ValueError):
        residue_cycle_check(eq, 5, "t")


def test_residue_check_respects_step_domains():
    # 5^b - 1 mod 3 is 0 for even b, 1 for odd b; restricting to odd b
    # must prove, the full domain must refute
    expr = Sum((Pow(5, "b", 1, 0), Const(Fraction(-1))))
    odd = ExpEquation(expr, (VarDomain("b", 1, None, 2),))
    assert residue_cycle_check(odd, 3, "t").status is VerdictStatus.PROVED
    full = ExpEquation(expr, (VarDomain("b", 0),))
    assert residue_cycle_check(full, 3, "t").status is VerdictStatus.REFUTED


# -- sign bounds -------------------------------------------------------------


def test_sign_by_bounds_positive():
    # (3^2a - 7)(7^2b - 3) - 20 + 12*d >= 2*46 - 20 + 12 > 0
    eq = ExpEquation(
        Sum((
            Prod((Sum((Pow(3, "a", 2, 0), Const(Fraction(-7)))),
                  Sum((Pow(7, "b", 2, 0), Const(Fraction(-3)))))),
            Const(Fraction(-20)),
            term(12, Var("d")),
        )),
        (VarDomain("a", 1), VarDomain("b", 1), VarDomain("d", 1)),
    )
    assert sign_by_bounds(eq, True, "t").status is VerdictStatus.PROVED


def test_sign_by_bounds_inconclusive_when_straddling():
    eq = ExpEquation(
        Sum((Pow(3, "a", 1, 0), Const(Fraction(-10)))),
        (VarDomain("a", 0),),
    )
    assert sign_by_bounds(eq, True, "t").status is VerdictStatus.INCONCLUSIVE


def test_sign_by_bounds_negative():
    eq = ExpEquation(
        Sum((term(-1, Pow(3, "a")), Const(Fraction(-1)))),
        (VarDomain("a", 0),),
    )
    assert sign_by_bounds(eq, False, "t").status is VerdictStatus.PROVED


# -- bounded search ----------------------------------------------------------


def test_bounded_search_finds_planted_solutions():
    # 3^a * 5^b = 45 exactly at (a,b) = (2,1)
    eq = ExpEquation(
        Sum((Prod((Pow(3, "a"), Pow(5, "b"))), Const(Fraction(-45)))),
        (VarDomain("a", 0), VarDomain("b", 0)),
    )
    v = bounded_exponent_search(eq, 20, "t", expected=((("a", 2), ("b", 1)),))
    assert v.status is VerdictStatus.PROVED
    assert v.solutions == ({"a": 2, "b": 1},)


def test_bounded_search_flags_unexpected_solutions():
    eq = ExpEquation(
        Sum((Pow(2, "a"), Const(Fraction(-8)))),
        (VarDomain("a", 0),),
    )
    v = bounded_exponent_search(eq, 20, "t", expected=())
    assert v.status is not VerdictStatus.PROVED
    assert {"a": 3} in v.solutions


def test_powtarget_attainable_exact_fractions():
    t = PowTarget(3, 2, -3, vmin=2)  # 3, 27, 243, ...
    assert t.attainable_in(Fraction(1), Fraction(100)) == [Fraction(3), Fraction(27)]
    neg = PowTarget(3, 2, -2, vmin=1)  # 1, 9, 81 -- includes 3^0
    assert neg.attainable_in(Fraction(1, 2), Fraction(10)) == [Fraction(1), Fraction(9)]
    assert t.attainable_in(Fraction(3), Fraction(27)) == []  # strict interior
