"""Shipped case ledger: end-to-end replay, plus independent pointwise
cross-checks that every encoded obligation is an exact consequence of the
divisor-sum condition sigma(n) = 2n - (d1 + d2 + d3) for n = 3^2a * p^2b.

The cross-check never trusts the ledger's algebra: for a grid of exponent
values it evaluates the entry's expression and, separately, the divisor-sum
defect E computed straight from the sigma formula, then demands the two
agree up to one fixed nonzero rational factor (exact identities) or the
declared inequality direction (bound-type entries)."""

import itertools
import re
from dataclasses import replace
from fractions import Fraction

import pytest

from deficia.caseproof import (
    SHIPPED_LEDGER,
    ChainObligation,
    IntervalObligation,
    ResidueObligation,
    SearchObligation,
    SignObligation,
    VerdictStatus,
    ledger_from_json,
    ledger_to_json,
    run_case_ledger,
    run_entry,
)
from deficia.search import search_structured

ENTRIES = {e.id: e for e in SHIPPED_LEDGER}
EXPECTED_ANCHORS = ("1.8411", "1.9997", "1.8890", "1.9820",
                    "1.9983", "1.9984", "1.9985", "1.9868")


def E(p, alpha, beta, d1, d2, d3):
    """Divisor-sum defect sigma(n) - 2n + d1 + d2 + d3, n = 3^2a * p^2b,
    computed independently from the multiplicative sigma formula."""
    n = 3 ** (2 * alpha) * p ** (2 * beta)
    sig = ((3 ** (2 * alpha + 1) - 1) // 2) * ((p ** (2 * beta + 1) - 1) // (p - 1))
    return Fraction(sig - 2 * n + d1 + d2 + d3)


# -- end-to-end replay -------------------------------------------------------


@pytest.fixture(scope="module")
def result():
    return run_case_ledger(SHIPPED_LEDGER)


def test_all_entries_proved(result):
    failing = [eid for eid, v in result.verdicts.items()
               if v.status is not VerdictStatus.PROVED]
    assert failing == []
    assert result.all_proved


def test_coverage_complete(result):
    assert result.missing_tags == ()
    assert result.unknown_tags == ()
    assert result.coverage_complete


def test_anchor_prefixes_in_order(result):
    assert result.anchors == EXPECTED_ANCHORS


def test_sole_survivor_is_1521(result):
    assert result.survivors == (1521,)
    v = result.verdicts["C6.2.p13d"]
    assert v.solutions == ({"beta": 1, "b3": 1},)
    # the surviving exponents really are n = 1521 with divisors 507,117,39
    assert E(13, 1, 1, 507, 117, 39) == 0


def test_survivor_comes_from_bounded_search():
    entry = ENTRIES["C6.2.p13d"]
    assert isinstance(entry.obligation, SearchObligation)
    assert entry.survivor_n == 1521


# -- interval entries: certificate form matches the divisor equation --------

_TAG = re.compile(r"^p=(\d+):(D1=(\d+),)?D2=(\d+),D3=(\d+)$")


def _interval_entries():
    out = []
    for e in SHIPPED_LEDGER:
        if not isinstance(e.obligation, IntervalObligation):
            continue
        tag = next(t for t in e.covers if _TAG.match(t))
        m = _TAG.match(tag)
        p = int(m.group(1))
        d1 = int(m.group(3)) if m.group(3) else 3
        out.append((e, p, d1, int(m.group(4)), int(m.group(5))))
    return out


@pytest.mark.parametrize(
    "entry,p,D1,D2,D3", _interval_entries(), ids=lambda v: getattr(v, "id", v)
)
def test_interval_form_is_exact_rearrangement(entry, p, D1, D2, D3):
    ob = entry.obligation
    form, target = ob.form, ob.target
    assert form.base == p
    ratios = set()
    for alpha in range(target.vmin, target.vmin + 4):
        for beta in range(form.vmin, form.vmin + 4):
            n = 3 ** (2 * alpha) * p ** (2 * beta)
            for D in (D1, D2, D3):
                assert n % D == 0
            x = Fraction(p) ** (form.stride * beta + form.offset)
            y = Fraction(3) ** (target.stride * alpha + target.offset)
            diff = (form.a * x + form.b) - y * (form.c * x + form.e)
            defect = E(p, alpha, beta, n // D1, n // D2, n // D3)
            if defect == 0:
                assert diff == 0
                continue
            ratios.add(diff / defect)
    assert len(ratios) == 1
    assert ratios.pop() != 0


# -- sign/residue/search entries: expression is the divisor equation --------
#
# For each entry we reconstruct, from the sub-case it covers, the actual
# divisors (d1, d2, d3) and true exponents (alpha, beta) as functions of
# the expression's variables, then demand expr = lambda * E pointwise for
# one fixed nonzero rational lambda.

def _n(p, a, b):
    return 3 ** (2 * a) * p ** (2 * b)


def _d3free(p, env):
    return 3 ** env["a3"] * p ** env["b3"]


# id -> (p, alpha(env), beta(env), (d1, d2, d3)(env))
EXACT_CONFIGS = {
    "C4.a": (23, lambda e: e["alpha"], lambda e: e["beta"],
             lambda e, n: (n // 3, n // 9, _d3free(23, e))),
    "C4.b": (23, lambda e: 1, lambda e: e["beta"],
             lambda e, n: (n // 3, n // 9, _d3free(23, e))),
    "C5.1a": (19, lambda e: e["alpha"], lambda e: e["beta"],
              lambda e, n: (n // 3, n // 9, _d3free(19, e))),
    "C5.1b": (19, lambda e: 1, lambda e: e["beta"],
              lambda e, n: (n // 3, n // 9, _d3free(19, e))),
    "C6.1.p11": (11, lambda e: e["alpha"], lambda e: e["beta"],
                 lambda e, n: (n // 3, n // 9, _d3free(11, e))),
    "C6.1.p13": (13, lambda e: e["alpha"], lambda e: e["beta"],
                 lambda e, n: (n // 3, n // 9, _d3free(13, e))),
    "C6.1.p17a": (17, lambda e: e["alpha"], lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 9, _d3free(17, e))),
    "C6.1.p17b": (17, lambda e: 1, lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 9, _d3free(17, e))),
    "C6.2.p11": (11, lambda e: e["alpha"], lambda e: e["beta"],
                 lambda e, n: (n // 3, n // 11, _d3free(11, e))),
    "C6.2.p13a": (13, lambda e: e["alpha"], lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 13, _d3free(13, e))),
    "C6.2.p13b": (13, lambda e: 1, lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 13, _d3free(13, e))),
    "C6.2.p13c": (13, lambda e: 1, lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 13, 3 * 13 ** e["b3"])),
    "C6.2.p13d": (13, lambda e: 1, lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 13, 3 * 13 ** e["b3"])),
    "C6.iii.27": (11, lambda e: e["alpha"], lambda e: e["beta"],
                  lambda e, n: (n // 3, n // 27, _d3free(11, e))),
    "C6.iii.33a": (11, lambda e: e["alpha"], lambda e: e["beta"],
                   lambda e, n: (n // 3, n // 33, _d3free(11, e))),
    "C6.iii.33b": (11, lambda e: 1, lambda e: e["beta"],
                   lambda e, n: (n // 3, n // 33, _d3free(11, e))),
    "C7.D13": (7, lambda e: e["alpha"], lambda e: e["beta"],
               lambda e, n: (n // 3, e["d2"], e["d3"])),
    "C7.a": (7, lambda e: e["alpha"], lambda e: e["beta"],
             lambda e, n: (n // 7, n // 9, _d3free(7, e))),
    "C7.b": (7, lambda e: e["alpha"], lambda e: 1,
             lambda e, n: (n // 7, n // 9, _d3free(7, e))),
    "C7.c": (7, lambda e: 2, lambda e: e["beta"],
             lambda e, n: (n // 7, n // 9, _d3free(7, e))),
    "C7.d": (7, lambda e: 1, lambda e: e["beta"],
             lambda e, n: (n // 7, n // 9, _d3free(7, e))),
    "C8.D1eq3": (5, lambda e: e["alpha"], lambda e: e["beta"],
                 lambda e, n: (n // 3, e["d2"], e["d3"])),
    "C8.D1eq5": (5, lambda e: e["alpha"], lambda e: e["beta"],
                 lambda e, n: (n // 5, e["d2"], e["d3"])),
    "C8.zp1.9b": (5, lambda e: e["alpha"], lambda e: 1,
                  lambda e, n: (n // 9, 3 ** (2 * e["alpha"] - 1 - e["t"]), 5)),
    "C8.zp1.9c": (5, lambda e: e["alpha"], lambda e: 1,
                  lambda e, n: (n // 9, 3 ** (2 * e["alpha"]), 5)),
    "C8.zp1.15c": (5, lambda e: 1, lambda e: 1,
                   lambda e, n: (15, 3 ** e["a2"], 5)),
    "C8.zp2.9b": (5, lambda e: e["alpha"], lambda e: 1,
                  lambda e, n: (n // 9, 5, 3)),
    "C8.zp2.15c": (5, lambda e: 1, lambda e: 1, lambda e, n: (15, 5, 3)),
}

# entries whose expression is E normalized by -8 / (3^2a * 5^2b); all are
# exact identities once the divisors are reconstructed from the sub-case
def _f3(e):
    return Fraction(3) ** (2 * e["alpha"] - e["u"])


def _f5(e):
    return Fraction(5) ** (2 * e["beta"] - e["w"])


NORMALIZED_CONFIGS = {
    "C8.zp1.9a": lambda e, n: (Fraction(n, 9), _f3(e), _f5(e)),
    "C8.zp1.15a": lambda e, n: (Fraction(n, 15), _f3(e), _f5(e)),
    "C8.zp1.15b": lambda e, n: (Fraction(n, 15), _f3(e), _f5(e)),
    "C8.zp2.9a": lambda e, n: (Fraction(n, 9), _f5(e), _f3(e)),
    "C8.zp2.15a": lambda e, n: (Fraction(n, 15), _f5(e), _f3(e)),
    "C8.zp2.15b": lambda e, n: (Fraction(n, 15), _f5(e), _f3(e)),
}


def _envs(eq, per_var=3, cap=250):
    names, choices = [], []
    for dom in eq.domains:
        vals = []
        v = dom.lo
        while len(vals) < per_var and (dom.hi is None or v <= dom.hi):
            vals.append(v)
            v += dom.step
        names.append(dom.name)
        choices.append(vals)
    envs = [dict(zip(names, combo)) for combo in itertools.product(*choices)]
    return envs[:cap]


def _expr_of(entry):
    return entry.obligation.eq


@pytest.mark.parametrize("eid", sorted(EXACT_CONFIGS), ids=str)
def test_case_expression_matches_divisor_equation(eid):
    entry = ENTRIES[eid]
    p, afun, bfun, dfun = EXACT_CONFIGS[eid]
    eq = _expr_of(entry)
    ratios = set()
    checked = 0
    for env in _envs(eq):
        a, b = afun(env), bfun(env)
        n = _n(p, a, b)
        d1, d2, d3 = dfun(env, n)
        val = eq.expr.eval(env)
        defect = E(p, a, b, d1, d2, d3)
        if defect == 0:
            assert val == 0
            continue
        ratios.add(val / defect)
        checked += 1
    assert checked > 0
    assert len(ratios) == 1 and ratios.pop() != 0


@pytest.mark.parametrize("eid", sorted(NORMALIZED_CONFIGS), ids=str)
def test_normalized_expression_is_scaled_divisor_equation(eid):
    entry = ENTRIES[eid]
    dfun = NORMALIZED_CONFIGS[eid]
    eq = _expr_of(entry)
    checked = 0
    for env in _envs(eq):
        a, b = env["alpha"], env["beta"]
        exps = dfun(env, _n(5, a, b))
        if any(Fraction(d).denominator != 1 for d in exps):
            continue
        d1, d2, d3 = (int(d) for d in exps)
        n = _n(5, a, b)
        assert eq.expr.eval(env) == Fraction(-8, n) * E(5, a, b, d1, d2, d3)
        checked += 1
    assert checked > 0


def test_divisor_sum_bound_entries_are_lower_bounds():
    # these three entries bound the sum of unknown divisors from above by
    # a multiple of the reconstructed ones, so their expression must never
    # exceed the true normalized defect -8E/n
    cases = {
        # id -> (reconstructed divisors, free-divisor sampler)
        "C8.zp3.main": (
            lambda e, b: (Fraction(5) ** (2 * b - e["m"]),),
            lambda d: [(x, y) for x in (d[0] - 1, d[0] // 2 + 1, 1)
                       for y in (1, x // 2 + 1) if 0 < y < x < d[0]],
        ),
        "C8.zp4.main": (
            lambda e, b: (Fraction(5) ** (2 * b - e["w1"]),
                          Fraction(5) ** (2 * b - e["w2"])),
            lambda d: [(y,) for y in (1, d[1] - 1, d[1] // 3 + 1) if 0 < y < d[1]],
        ),
        "C8.zp5.a": (
            lambda e, b: (Fraction(5) ** (2 * b - e["w1"]),
                          Fraction(5) ** (2 * b - e["w3"])),
            lambda d: [(y,) for y in (1, d[0] - 1, d[0] // 3 + 1)
                       if 0 < y < d[0] and y != d[1]],
        ),
    }
    for eid, (pinned, free) in cases.items():
        eq = _expr_of(ENTRIES[eid])
        checked = 0
        for env in _envs(eq, per_var=2, cap=64):
            a, b = env["alpha"], env["beta"]
            pins = pinned(env, b)
            if any(p5 < 1 or Fraction(p5).denominator != 1 for p5 in pins):
                continue
            n = _n(5, a, b)
            for extra in free(pins):
                divisors = sorted(pins + extra, reverse=True)
                if len(divisors) != 3:
                    continue
                d1, d2, d3 = divisors
                if eid == "C8.zp3.main" and d1 != pins[0]:
                    continue  # the bound assumes the pinned divisor is largest
                if eid == "C8.zp4.main" and (d1, d2) != pins:
                    continue
                if eid == "C8.zp5.a" and (d1, d3) != pins:
                    continue
                val = eq.expr.eval(env)
                assert val <= Fraction(-8, n) * E(5, a, b, d1, d2, d3), (eid, env)
                checked += 1
        assert checked > 0, eid


def test_master_equation_entries_for_smallest_prime():
    """Entries built directly from the p=5 divisor-sum expansion carry
    their three divisor sub-expressions verbatim; check the whole
    expression against E with those divisors evaluated."""
    from deficia.caseproof.core import Const, Prod, Sum

    checked_entries = 0
    for entry in SHIPPED_LEDGER:
        if entry.p_values != (5,):
            continue
        if not isinstance(entry.obligation, (ResidueObligation, SignObligation)):
            continue
        eq = _expr_of(entry)
        expr = eq.expr
        if not (isinstance(expr, Sum) and len(expr.children) == 7
                and isinstance(expr.children[3], Const)
                and expr.children[3].value == 1):
            continue
        d_exprs = []
        for child in expr.children[4:7]:
            assert isinstance(child, Prod)
            assert isinstance(child.children[0], Const)
            assert child.children[0].value == 8
            d_exprs.append(Prod(child.children[1:]))
        for env in _envs(eq, per_var=2, cap=64):
            dvals = [d.eval(env) for d in d_exprs]
            assert all(v.denominator == 1 for v in dvals)
            got = expr.eval(env)
            want = 8 * E(5, env["alpha"], env["beta"],
                         *(int(v) for v in dvals))
            assert got == want, (entry.id, env)
        checked_entries += 1
    assert checked_entries >= 15


# -- abundancy chains --------------------------------------------------------


def test_chain_leading_terms_are_abundancy_bounds():
    # sigma(n)/n < (3/2) * (p/(p-1)) for n = 3^2a p^2b; each cut chain's
    # leading term must dominate that bound for every covered prime
    for entry in SHIPPED_LEDGER:
        ob = entry.obligation
        if not isinstance(ob, ChainObligation) or ob.cut is None:
            continue
        for p in entry.p_values:
            assert ob.terms[0] >= Fraction(3 * p, 2 * (p - 1)), entry.id


# -- falsified ledgers are rejected ------------------------------------------


def test_falsified_chain_detected():
    entry = ENTRIES["P1"]
    bad = replace(entry, obligation=ChainObligation(
        entry.obligation.terms + (Fraction(1, 2),), None))
    assert run_entry(bad).status is not VerdictStatus.PROVED


def test_falsified_interval_detected():
    entry = ENTRIES["C1.p47"]
    ob = entry.obligation
    widened = replace(entry, obligation=IntervalObligation(
        ob.form, Fraction(0), Fraction(30), ob.target))
    assert run_entry(widened).status is not VerdictStatus.PROVED


def test_falsified_search_expectation_detected():
    entry = ENTRIES["C6.2.p13d"]
    ob = entry.obligation
    lying = replace(entry, obligation=SearchObligation(ob.eq, ob.bound, ()))
    assert run_entry(lying).status is not VerdictStatus.PROVED


def test_missing_entry_breaks_coverage():
    pruned = [e for e in SHIPPED_LEDGER if e.id != "C3.4.p31"]
    res = run_case_ledger(pruned)
    assert not res.coverage_complete
    assert "p=31:D1=3,D2=9,D3=93" in res.missing_tags


def test_duplicate_entry_rejected():
    with pytest.raises(ValueError):
        run_case_ledger(list(SHIPPED_LEDGER) + [SHIPPED_LEDGER[0]])


# -- serialization -----------------------------------------------------------


def test_ledger_json_round_trip():
    text = ledger_to_json(SHIPPED_LEDGER)
    back = ledger_from_json(text)
    assert ledger_to_json(back) == text
    res = run_case_ledger(back)
    assert res.all_proved and res.survivors == (1521,)
    assert res.anchors == EXPECTED_ANCHORS


# -- independent global cross-check ------------------------------------------


def test_structured_search_agrees_with_ledger_conclusion():
    hits = search_structured((3, 3), (5, 79), alpha_max=4, beta_max=3, k=3)
    assert [h.record.n for h in hits] == [1521]
