"""The shipped case ledger: a complete, machine-checkable decomposition of
the claim that 1521 = 3^2 * 13^2 is the only odd number with exactly two
prime factors and exactly three deficient divisors (sigma(n) = 2n - (d1 +
d2 + d3) with distinct proper divisors d1 > d2 > d3).

Outline encoded here (Di = n/di are the cofactors, so D1 < D2 < D3):

* such an n is a perfect square (odd n, odd witness count), n = p1^2a * p2^2b;
* abundancy bounds force p1 = 3 and p = p2 <= 79 (entries P1, P2);
* for p >= 11 the smallest cofactor is D1 = 3 (rule-b), and for p >= 23
  also D2 = 9 (rule-c);
* per remaining prime, bound chains confine the free cofactors to a short
  candidate list, and each candidate either (a) rewrites the divisor-sum
  equation as 3^k = F(p^m) with F linear-fractional, refuted by an interval
  certificate, (b) is refuted by a sign bound on an exact rearrangement,
  (c) is refuted by a residue contradiction that exhausts one full residue
  cycle per exponent variable, or (d) is settled by a bounded exhaustive
  search.  The single surviving solution is n = 1521.

Every rational constant below is exact; derivations are one multiply-out
away from sigma(n) = 2n - (d1+d2+d3) and are re-verified pointwise by the
test suite against that master equation.
"""

from __future__ import annotations

from fractions import Fraction as F

from .core import (
    Const,
    ExpEquation,
    MoebiusForm,
    Pow,
    PowTarget,
    Prod,
    Sum,
    Var,
    VarDomain,
    term,
)
from .runner import (
    CaseEntry,
    ChainObligation,
    CofactorCut,
    IntervalObligation,
    ResidueObligation,
    SearchObligation,
    SignObligation,
)

__all__ = ["SHIPPED_LEDGER", "build_ledger"]


def _C(v) -> Const:
    return Const(F(v))


def _dom(name, lo, hi=None, step=1) -> VarDomain:
    return VarDomain(name, lo, hi, step)


def _eq(expr, *domains) -> ExpEquation:
    return ExpEquation(expr, tuple(domains))


def _chain(eid, title, ps, terms, covers, anchor=None, cut=None, notes=""):
    return CaseEntry(
        id=eid, title=title, p_values=tuple(ps),
        obligation=ChainObligation(tuple(F(t) for t in terms), cut),
        covers=tuple(covers), anchor=anchor, notes=notes,
    )


def _interval(eid, title, p, form, low, high, target, covers,
              fallback=None, notes=""):
    return CaseEntry(
        id=eid, title=title, p_values=(p,),
        obligation=IntervalObligation(form, F(low), F(high), target),
        fallback=fallback, covers=tuple(covers), notes=notes,
    )


def _sign(eid, title, ps, eq, covers, positive=True, notes=""):
    return CaseEntry(
        id=eid, title=title, p_values=tuple(ps),
        obligation=SignObligation(eq, positive),
        covers=tuple(covers), notes=notes,
    )


def _residue(eid, title, ps, eq, modulus, covers, notes=""):
    return CaseEntry(
        id=eid, title=title, p_values=tuple(ps),
        obligation=ResidueObligation(eq, modulus),
        covers=tuple(covers), notes=notes,
    )


# The equation 3^(2a-3) = (p*x - 1) / ((82-p)*x - 81), x = p^2b, is the
# exact rearrangement of the divisor-sum condition when D1=3, D2=9, D3=27.
def _form_d3_27(p: int) -> MoebiusForm:
    return MoebiusForm(a=p, b=-1, c=82 - p, e=-81, base=p, stride=2, offset=0)


# D1=3, D2=9, D3=p:  3^(2a-2) = (p^2*x - 1) / ((46p - p^2 - 18)*x - 27),
# x = p^(2b-1).
def _form_d3_p(p: int) -> MoebiusForm:
    return MoebiusForm(
        a=p * p, b=-1, c=46 * p - p * p - 18, e=-27,
        base=p, stride=2, offset=-1,
    )


# D1=3, D2=9, D3=81:  3^(2a-4) = (p*x - 1) / ((250 - 7p)*x - 243), x = p^2b.
def _form_d3_81(p: int) -> MoebiusForm:
    return MoebiusForm(a=p, b=-1, c=250 - 7 * p, e=-243, base=p, stride=2, offset=0)


_T_ODD_GE1 = PowTarget(3, 2, -3, vmin=2)   # 3, 27, 243, ...   (27 | n)
_T_EVEN_GE0 = PowTarget(3, 2, -2, vmin=1)  # 1, 9, 81, ...     (9 | n)
_T_EVEN_GE2 = PowTarget(3, 2, -4, vmin=2)  # 1, 9, 81, ...     (81 | n)


def _pow3(var, stride=1, offset=0):
    return Pow(3, var, stride, offset)


def _d3_term(coeff, p):
    return term(coeff, _pow3("a3"), Pow(p, "b3"))


def build_ledger() -> list[CaseEntry]:
    entries: list[CaseEntry] = []
    add = entries.append

    # -- reduction to n = 3^2a * p^2b, 5 <= p <= 79 ------------------------
    add(_chain(
        "P1", "smaller prime 5 or more: abundancy 35/24 plus the three "
        "largest reciprocal cofactors 1/5 + 1/7 + 1/25 stays below 2",
        (), (F(35, 24), F(1, 5), F(1, 7), F(1, 25)),
        ["p1>=5"], anchor="1.8411",
        notes="cofactors of p1^x p2^y with 5 <= p1 < p2 are at least 5, 7, 25",
    ))
    add(_chain(
        "P2", "smaller prime 3, larger prime 83 or more: abundancy 249/164 "
        "plus 1/3 + 1/9 + 1/27 stays below 2",
        (), (F(249, 164), F(1, 3), F(1, 9), F(1, 27)),
        ["p=3:p2>=83"], anchor="1.9997",
    ))
    add(_chain(
        "RB", "p >= 11 forces D1 = 3: otherwise cofactors are at least "
        "9, 11, 27",
        tuple(q for q in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                          59, 61, 67, 71, 73, 79)),
        (F(33, 20), F(1, 9), F(1, 11), F(1, 27)),
        ["ruleB"], anchor="1.8890",
    ))
    add(_chain(
        "RC", "p >= 23 forces D2 = 9: with D1 = 3, a second cofactor of 23 "
        "or more leaves at most 69/44 + 1/3 + 1/23 + 1/27",
        tuple(q for q in (23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                          73, 79)),
        (F(69, 44), F(1, 3), F(1, 23), F(1, 27)),
        ["ruleC"], anchor="1.9820",
    ))

    # -- case 1: p in 47..79, D1=3, D2=9; D3 < p so D3 = 27 ----------------
    case1 = (47, 53, 59, 61, 67, 71, 73, 79)
    add(_chain(
        "C1.cut", "47 <= p <= 79: D3 below p (so D3 = 27)",
        case1, (F(141, 92), F(1, 3), F(1, 9), F(1, 47)),
        [f"case1:p={p}:D3cut" for p in case1],
        anchor="1.9983", cut=CofactorCut((3, 9), None),
    ))
    c1_intervals = {
        47: (1, 2), 53: (1, 2), 59: (2, 3), 61: (2, 3),
        67: (4, 5), 71: (6, 7), 73: (8, 9), 79: (26, 27),
    }
    for p in case1:
        lo, hi = c1_intervals[p]
        add(_interval(
            f"C1.p{p}", f"p={p}, D3=27: 3^(2a-3) would have to lie in "
            f"({lo},{hi})", p, _form_d3_27(p), lo, hi, _T_ODD_GE1,
            [f"p={p}:D1=3,D2=9,D3=27"],
        ))

    # -- case 2: p in {37,41,43}, D3 < 81 so D3 in {27, p} -----------------
    case2 = (37, 41, 43)
    add(_chain(
        "C2.cut", "p in {37,41,43}: D3 below 81",
        case2, (F(37, 24), F(1, 3), F(1, 9), F(1, 81)),
        [f"case2:p={p}:D3cut" for p in case2],
        anchor="1.9984", cut=CofactorCut((3, 9), 81),
    ))
    c21_intervals = {37: (0, 1), 41: (1, 2), 43: (1, 2)}
    for p in case2:
        lo, hi = c21_intervals[p]
        add(_interval(
            f"C2.1.p{p}", f"p={p}, D3=27", p, _form_d3_27(p), lo, hi,
            _T_ODD_GE1, [f"p={p}:D1=3,D2=9,D3=27"],
        ))
    add(_interval(
        "C2.2.p37", "p=37, D3=37", 37, _form_d3_p(37), 4, 5, _T_EVEN_GE0,
        ["p=37:D1=3,D2=9,D3=37"],
    ))
    add(_interval(
        "C2.2.p41", "p=41, D3=41: the certificate leaves the single "
        "candidate 9, removed by solving 3^(2a-2)=9 exactly",
        41, _form_d3_p(41), 8, 10, _T_EVEN_GE0,
        ["p=41:D1=3,D2=9,D3=41"],
        fallback=SearchObligation(_eq(
            Sum((term(-2, Pow(41, "beta", 2, -1)), _C(242))),
            _dom("beta", 1),
        )),
    ))
    add(_interval(
        "C2.2.p43", "p=43, D3=43", 43, _form_d3_p(43), 16, 17, _T_EVEN_GE0,
        ["p=43:D1=3,D2=9,D3=43"],
    ))

    # -- case 3: p in {29,31} ----------------------------------------------
    add(_chain(
        "C3.cut31", "p=31: D3 below 243, so D3 in {27, 31, 81, 93}",
        (31,), (F(31, 20), F(1, 3), F(1, 9), F(1, 243)),
        ["case3:p=31:D3cut"], anchor="1.9985", cut=CofactorCut((3, 9), 243),
    ))
    add(_chain(
        "C3.cut29", "p=29: D3 below 729, so D3 in {27, 29, 81, 87, 243, 261}",
        (29,), (F(87, 56), F(1, 3), F(1, 9), F(1, 729)),
        ["case3:p=29:D3cut"], cut=CofactorCut((3, 9), 729),
    ))
    add(_interval("C3.1.p29", "p=29, D3=27", 29, _form_d3_27(29), 0, 1,
                  _T_ODD_GE1, ["p=29:D1=3,D2=9,D3=27"]))
    add(_interval("C3.1.p31", "p=31, D3=27", 31, _form_d3_27(31), 0, 1,
                  _T_ODD_GE1, ["p=31:D1=3,D2=9,D3=27"]))
    add(_interval("C3.2.p29", "p=29, D3=29", 29, _form_d3_p(29), 1, 2,
                  _T_EVEN_GE0, ["p=29:D1=3,D2=9,D3=29"]))
    add(_interval("C3.2.p31", "p=31, D3=31", 31, _form_d3_p(31), 2, 3,
                  _T_EVEN_GE0, ["p=31:D1=3,D2=9,D3=31"]))
    add(_interval("C3.3.p29", "p=29, D3=81", 29, _form_d3_81(29), 0, 1,
                  _T_EVEN_GE2, ["p=29:D1=3,D2=9,D3=81"]))
    add(_interval("C3.3.p31", "p=31, D3=81", 31, _form_d3_81(31), 0, 1,
                  _T_EVEN_GE2, ["p=31:D1=3,D2=9,D3=81"]))
    add(_interval(
        "C3.4.p31", "p=31, D3=93", 31,
        MoebiusForm(a=961, b=-1, c=87, e=-27, base=31, stride=2, offset=-1),
        11, 12, _T_EVEN_GE0, ["p=31:D1=3,D2=9,D3=93"],
    ))
    add(_interval(
        "C3.5.p29.87", "p=29, D3=87", 29,
        MoebiusForm(a=841, b=-1, c=139, e=-27, base=29, stride=2, offset=-1),
        6, 7, _T_EVEN_GE0, ["p=29:D1=3,D2=9,D3=87"],
    ))
    add(_interval(
        "C3.5.p29.243", "p=29, D3=243", 29,
        MoebiusForm(a=1, b=-1, c=1, e=-729, base=29, stride=2, offset=1),
        1, 2, PowTarget(3, 2, -5, vmin=3), ["p=29:D1=3,D2=9,D3=243"],
    ))
    add(_interval(
        "C3.5.p29.261", "p=29, D3=261: the value 32 sits in the interval "
        "but is not a power of 3", 29,
        MoebiusForm(a=841, b=-1, c=27, e=-27, base=29, stride=2, offset=-1),
        31, 33, _T_EVEN_GE0, ["p=29:D1=3,D2=9,D3=261"],
    ))

    # -- case 4: p = 23, D1=3, D2=9, d3 free --------------------------------
    # exact rearrangement: (5*3^(2a-2) - 23)(5*23^2b - 27) - 616 + 220*d3 = 0
    add(_sign(
        "C4.a", "p=23, a>=2: the rearranged left side is strictly positive",
        (23,),
        _eq(
            Sum((
                Prod((
                    Sum((term(5, Pow(3, "alpha", 2, -2)), _C(-23))),
                    Sum((term(5, Pow(23, "beta", 2, 0)), _C(-27))),
                )),
                _C(-616),
                _d3_term(220, 23),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=23:D2=9:alpha>=2"],
    ))
    add(_residue(
        "C4.b", "p=23, a=1: -90*23^2b - 130 + 220*d3 has no root mod 23",
        (23,),
        _eq(
            Sum((term(-90, Pow(23, "beta", 2, 0)), _C(-130),
                 _d3_term(220, 23))),
            _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        23, ["p=23:D2=9:alpha=1"],
    ))

    # -- case 5: p = 19 ------------------------------------------------------
    add(_chain(
        "C5.cut", "p=19: a second cofactor of 19 or more together with a "
        "third of 57 or more is impossible; hence D2=9, or D2=19 with D3=27",
        (19,), (F(19, 12), F(1, 3), F(1, 19), F(1, 57)),
        ["case5:D2cut"], anchor="1.9868",
        notes="cofactors of 3^x 19^y between 19 and 57 are 19 and 27 only, "
        "and 27 admits no third cofactor below 57",
    ))
    add(_sign(
        "C5.1a", "p=19, D2=9, a>=2: (3^2a - 19)(19^2b - 3) - 56 + 36*d3 > 0",
        (19,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, 0), _C(-19))),
                    Sum((Pow(19, "beta", 2, 0), _C(-3))),
                )),
                _C(-56),
                _d3_term(36, 19),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=19:D2=9:alpha>=2"],
    ))
    add(_residue(
        "C5.1b", "p=19, D2=9, a=1: -10*19^2b - 26 + 36*d3 has no root mod "
        "19 (a3 <= 2 because a=1)",
        (19,),
        _eq(
            Sum((term(-10, Pow(19, "beta", 2, 0)), _C(-26),
                 _d3_term(36, 19))),
            _dom("beta", 1), _dom("a3", 0, 2), _dom("b3", 0),
        ),
        19, ["p=19:D2=9:alpha=1"],
    ))
    add(_interval(
        "C5.2", "p=19, D2=19, D3=27", 19,
        MoebiusForm(a=361, b=-1, c=117, e=-81, base=19, stride=2, offset=-1),
        3, 4, _T_ODD_GE1, ["p=19:D2=19,D3=27"],
    ))

    # -- case 6: p in {11, 13, 17}, D1 = 3 ----------------------------------
    entries.extend(_case6())
    # -- case 7: p = 7 -------------------------------------------------------
    entries.extend(_case7())
    # -- case 8: p = 5 -------------------------------------------------------
    entries.extend(_case8())
    return entries


def _case6() -> list[CaseEntry]:
    entries: list[CaseEntry] = []
    add = entries.append

    add(_chain(
        "C6.17.D2cut", "p=17: D2 below 27, so D2 in {9, 17}",
        (17,), (F(51, 32), F(1, 3), F(1, 27), F(1, 51)),
        ["case6:p=17:D2cut"], cut=CofactorCut((3,), 27),
    ))
    add(_chain(
        "C6.17.D3cut", "p=17, D2=17: D3 below 81, so D3 in {27, 51}",
        (17,), (F(51, 32), F(1, 3), F(1, 17), F(1, 81)),
        ["case6:p=17:D2=17:D3cut"], cut=CofactorCut((3, 17), 81),
    ))
    add(_chain(
        "C6.13.D2cut", "p=13: D2 below 39, so D2 in {9, 13, 27}",
        (13,), (F(13, 8), F(1, 3), F(1, 39), F(1, 81)),
        ["case6:p=13:D2cut"], cut=CofactorCut((3,), 39),
    ))
    add(_chain(
        "C6.13.D3cut", "p=13, D2=27: D3 below 243, so D3 in {39, 81, 117, 169}",
        (13,), (F(13, 8), F(1, 3), F(1, 27), F(1, 243)),
        ["case6:p=13:D2=27:D3cut"], cut=CofactorCut((3, 27), 243),
    ))
    add(_chain(
        "C6.11.D2cut", "p=11: D2 below 121, so D2 in {9, 11, 27, 33, 81, 99}",
        (11,), (F(33, 20), F(1, 3), F(1, 121), F(1, 243)),
        ["case6:p=11:D2cut"], cut=CofactorCut((3,), 121),
    ))
    add(_chain(
        "C6.11.81.D3cut", "p=11, D2=81: D3 below 243, so D3 in {99, 121}",
        (11,), (F(33, 20), F(1, 3), F(1, 81), F(1, 243)),
        ["case6:p=11:D2=81:D3cut"], cut=CofactorCut((3, 81), 243),
    ))
    add(_chain(
        "C6.11.99.D3cut", "p=11, D2=99: D3 below 243, so D3 = 121",
        (11,), (F(33, 20), F(1, 3), F(1, 99), F(1, 243)),
        ["case6:p=11:D2=99:D3cut"], cut=CofactorCut((3, 99), 243),
    ))

    # D2 = 9, d3 free: (k1*3^(2a-2) - p)(k1*p^2b - 27) - k2 + k3*d3
    add(_sign(
        "C6.1.p11", "p=11, D2=9: (17*3^(2a-2) - 11)(17*11^2b - 27) - 280 "
        "+ 340*d3 > 0 for all exponents", (11,),
        _eq(
            Sum((
                Prod((
                    Sum((term(17, Pow(3, "alpha", 2, -2)), _C(-11))),
                    Sum((term(17, Pow(11, "beta", 2, 0)), _C(-27))),
                )),
                _C(-280),
                _d3_term(340, 11),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=11:D2=9:all"],
    ))
    add(_sign(
        "C6.1.p13", "p=13, D2=9: (15*3^(2a-2) - 13)(15*13^2b - 27) - 336 "
        "+ 360*d3 > 0 for all exponents", (13,),
        _eq(
            Sum((
                Prod((
                    Sum((term(15, Pow(3, "alpha", 2, -2)), _C(-13))),
                    Sum((term(15, Pow(13, "beta", 2, 0)), _C(-27))),
                )),
                _C(-336),
                _d3_term(360, 13),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=13:D2=9:all"],
    ))
    add(_sign(
        "C6.1.p17a", "p=17, D2=9, a>=2: (11*3^(2a-2) - 17)(11*17^2b - 27) "
        "- 448 + 352*d3 > 0", (17,),
        _eq(
            Sum((
                Prod((
                    Sum((term(11, Pow(3, "alpha", 2, -2)), _C(-17))),
                    Sum((term(11, Pow(17, "beta", 2, 0)), _C(-27))),
                )),
                _C(-448),
                _d3_term(352, 17),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=17:D2=9:alpha>=2"],
    ))
    add(_residue(
        "C6.1.p17b", "p=17, D2=9, a=1: 3*17^2b + 13 - 16*d3 has no root "
        "mod 51", (17,),
        _eq(
            Sum((term(3, Pow(17, "beta", 2, 0)), _C(13),
                 term(-16, _pow3("a3"), Pow(17, "b3")))),
            _dom("beta", 1), _dom("a3", 0, 2), _dom("b3", 0),
        ),
        51, ["p=17:D2=9:alpha=1"],
    ))

    # D2 = p, d3 free
    add(_sign(
        "C6.2.p11", "p=11, D2=11: (49*3^(2a-1) - 121)(49*11^(2b-1) - 9) "
        "- 1040 + 980*d3 > 0 for all exponents", (11,),
        _eq(
            Sum((
                Prod((
                    Sum((term(49, Pow(3, "alpha", 2, -1)), _C(-121))),
                    Sum((term(49, Pow(11, "beta", 2, -1)), _C(-9))),
                )),
                _C(-1040),
                _d3_term(980, 11),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=11:D2=11:all"],
    ))
    add(_sign(
        "C6.2.p13a", "p=13, D2=13, a>=2: (33*3^(2a-1) - 169)(11*13^(2b-1) "
        "- 3) - 496 + 264*d3 > 0", (13,),
        _eq(
            Sum((
                Prod((
                    Sum((term(33, Pow(3, "alpha", 2, -1)), _C(-169))),
                    Sum((term(11, Pow(13, "beta", 2, -1)), _C(-3))),
                )),
                _C(-496),
                _d3_term(264, 13),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=13:D2=13:alpha>=2"],
    ))
    add(_residue(
        "C6.2.p13b", "p=13, D2=13, a=1, a3 even: 35*13^(2b-1) + 13 - "
        "12*3^a3*13^b3 has no root mod 7", (13,),
        _eq(
            Sum((term(35, Pow(13, "beta", 2, -1)), _C(13),
                 term(-12, _pow3("a3"), Pow(13, "b3")))),
            _dom("beta", 1), _dom("a3", 0, 2, 2), _dom("b3", 0),
        ),
        7, ["p=13:D2=13:alpha=1:a3!=1"],
        notes="a=1 gives a3 <= 2; a3 = 1 is handled separately",
    ))
    add(_residue(
        "C6.2.p13c", "p=13, D2=13, a=1, a3=1, b>=2: 35*13^(2b-1) + 13 - "
        "36*13^b3 has no root mod 169", (13,),
        _eq(
            Sum((term(35, Pow(13, "beta", 2, -1)), _C(13),
                 term(-36, Pow(13, "b3")))),
            _dom("beta", 2), _dom("b3", 0),
        ),
        169, ["p=13:D2=13:alpha=1:a3=1:beta>=2"],
    ))
    add(CaseEntry(
        id="C6.2.p13d",
        title="p=13, D2=13, a=1, a3=1: bounded search; the unique solution "
        "b=1, b3=1 is n = 1521 with divisors 507, 117, 39",
        p_values=(13,),
        obligation=SearchObligation(
            _eq(
                Sum((term(35, Pow(13, "beta", 2, -1)), _C(13),
                     term(-36, Pow(13, "b3")))),
                _dom("beta", 1), _dom("b3", 0),
            ),
            bound=50,
            expected=((("beta", 1), ("b3", 1)),),
        ),
        covers=("p=13:D2=13:alpha=1:a3=1:beta=1",),
        survivor_n=1521,
        notes="b=1 forces b3 <= 2, well within the bound; b >= 2 is also "
        "excluded by the mod-169 entry",
    ))

    # p=17, D2=17
    add(_interval(
        "C6.i.27", "p=17, D2=17, D3=27", 17,
        MoebiusForm(a=289, b=-1, c=337, e=-81, base=17, stride=2, offset=-1),
        0, 1, _T_ODD_GE1, ["p=17:D2=17,D3=27"],
    ))
    add(_interval(
        "C6.i.51", "p=17, D2=17, D3=51: 3^(2a-1) would lie in (32,35)", 17,
        MoebiusForm(a=289, b=-1, c=9, e=-9, base=17, stride=2, offset=-1),
        32, 35, PowTarget(3, 2, -1, vmin=1), ["p=17:D2=17,D3=51"],
    ))

    # p=13, D2=27
    add(_interval(
        "C6.ii.39", "p=13, D2=27, D3=39", 13,
        MoebiusForm(a=169, b=-1, c=177, e=-81, base=13, stride=2, offset=-1),
        0, 1, _T_ODD_GE1, ["p=13:D2=27,D3=39"],
    ))
    add(_interval(
        "C6.ii.81", "p=13, D2=27, D3=81", 13,
        MoebiusForm(a=13, b=-1, c=15, e=-243, base=13, stride=2, offset=0),
        0, 1, _T_EVEN_GE2, ["p=13:D2=27,D3=81"],
    ))
    add(_interval(
        "C6.ii.117", "p=13, D2=27, D3=117", 13,
        MoebiusForm(a=169, b=-1, c=33, e=-81, base=13, stride=2, offset=-1),
        5, 7, _T_ODD_GE1, ["p=13:D2=27,D3=117"],
    ))
    add(_interval(
        "C6.ii.169", "p=13, D2=27, D3=169: candidate 27 removed by solving "
        "3^(2a-3)=27 exactly", 13,
        MoebiusForm(a=2197, b=-1, c=141, e=-81, base=13, stride=2, offset=-2),
        15, 37, _T_ODD_GE1, ["p=13:D2=27,D3=169"],
        fallback=SearchObligation(_eq(
            Sum((term(-1610, Pow(13, "beta", 2, -2)), _C(2186))),
            _dom("beta", 1),
        )),
    ))

    # p=11, D2 in {27, 33}
    add(_sign(
        "C6.iii.27", "p=11, D2=27 (forces a>=2): (3^(2a-3) - 1)"
        "(11^(2b+1) - 81) - 80 + 20*d3 > 0", (11,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, -3), _C(-1))),
                    Sum((Pow(11, "beta", 2, 1), _C(-81))),
                )),
                _C(-80),
                _d3_term(20, 11),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=11:D2=27:all"],
    ))
    add(_sign(
        "C6.iii.33a", "p=11, D2=33, a>=2: (3^(2a+1) - 121)(11^(2b-1) - 1) "
        "- 120 + 20*d3 > 0", (11,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, 1), _C(-121))),
                    Sum((Pow(11, "beta", 2, -1), _C(-1))),
                )),
                _C(-120),
                _d3_term(20, 11),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=11:D2=33:alpha>=2"],
    ))
    add(_residue(
        "C6.iii.33b", "p=11, D2=33, a=1: -47*11^(2b-1) - 13 + 10*d3 has "
        "no root mod 121", (11,),
        _eq(
            Sum((term(-47, Pow(11, "beta", 2, -1)), _C(-13),
                 term(10, _pow3("a3"), Pow(11, "b3")))),
            _dom("beta", 1), _dom("a3", 0, 2), _dom("b3", 0),
        ),
        121, ["p=11:D2=33:alpha=1"],
        notes="mod 11 alone is not enough: the residue 9 would survive",
    ))

    # p=11, D2 in {81, 99}
    add(_interval(
        "C6.iv.99", "p=11, D2=81, D3=99", 11,
        MoebiusForm(a=121, b=-1, c=103, e=-243, base=11, stride=2, offset=-1),
        1, 2, _T_EVEN_GE2, ["p=11:D2=81,D3=99"],
    ))
    add(_interval(
        "C6.iv.121", "p=11, D2=81, D3=121", 11,
        MoebiusForm(a=1331, b=-1, c=773, e=-243, base=11, stride=2, offset=-2),
        1, 3, _T_EVEN_GE2, ["p=11:D2=81,D3=121"],
    ))
    add(_interval(
        "C6.v", "p=11, D2=99, D3=121: candidate 81 removed by solving "
        "3^(2a-2)=81 exactly", 11,
        MoebiusForm(a=1331, b=-1, c=37, e=-27, base=11, stride=2, offset=-2),
        35, 134, _T_EVEN_GE0, ["p=11:D2=99,D3=121"],
        fallback=SearchObligation(_eq(
            Sum((term(-1666, Pow(11, "beta", 2, -2)), _C(2186))),
            _dom("beta", 1),
        )),
    ))
    return entries


def _case7() -> list[CaseEntry]:
    entries: list[CaseEntry] = []
    add = entries.append
    add(_chain(
        "C7.D1cut", "p=7: D1 below 9, so D1 in {3, 7}",
        (7,), (F(7, 4), F(1, 9), F(1, 21), F(1, 27)),
        ["case7:D1cut"], cut=CofactorCut((), 9),
    ))
    add(_chain(
        "C7.D2cut", "p=7, D1=7: D2 below 21, so D2 = 9",
        (7,), (F(7, 4), F(1, 7), F(1, 21), F(1, 27)),
        ["case7:D2cut"], cut=CofactorCut((7,), 21),
    ))
    add(_sign(
        "C7.D13", "p=7, D1=3: (3^2a - 7)(7^2b - 3) - 20 + 12*(d2 + d3) > 0 "
        "since d2 >= 3 and d3 >= 1", (7,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, 0), _C(-7))),
                    Sum((Pow(7, "beta", 2, 0), _C(-3))),
                )),
                _C(-20),
                term(12, Var("d2")),
                term(12, Var("d3")),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("d2", 3), _dom("d3", 1),
        ),
        ["p=7:D1=3"],
    ))
    add(_sign(
        "C7.a", "p=7, D1=7, D2=9, a>=3 and b>=2: (3^(2a-1) - 49)"
        "(7^(2b-1) - 9) - 440 + 12*d3 > 0", (7,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, -1), _C(-49))),
                    Sum((Pow(7, "beta", 2, -1), _C(-9))),
                )),
                _C(-440),
                term(12, _pow3("a3"), Pow(7, "b3")),
            )),
            _dom("alpha", 3), _dom("beta", 2), _dom("a3", 0), _dom("b3", 0),
        ),
        ["p=7:D1=7,D2=9:alpha>=3:beta>=2"],
    ))
    add(_residue(
        "C7.b", "p=7, D1=7, D2=9, a>=3, b=1: 3^(2a-1) + 171 - 6*d3 has no "
        "root mod 27", (7,),
        _eq(
            Sum((Pow(3, "alpha", 2, -1), _C(171),
                 term(-6, _pow3("a3"), Pow(7, "b3")))),
            _dom("alpha", 3), _dom("a3", 0), _dom("b3", 0),
        ),
        27, ["p=7:D1=7,D2=9:alpha>=3:beta=1"],
    ))
    add(_residue(
        "C7.c", "p=7, D1=7, D2=9, a=2: -11*7^(2b-1) - 121 + 6*d3 cannot "
        "vanish since 6*d3 is never divisible by 11", (7,),
        _eq(
            Sum((term(-11, Pow(7, "beta", 2, -1)), _C(-121),
                 term(6, _pow3("a3"), Pow(7, "b3")))),
            _dom("beta", 1), _dom("a3", 0), _dom("b3", 0),
        ),
        11, ["p=7:D1=7,D2=9:alpha=2"],
    ))
    add(_residue(
        "C7.d", "p=7, D1=7, D2=9, a=1: -23*7^(2b-1) - 13 + 6*d3 has no "
        "root mod 49 (a3 <= 2)", (7,),
        _eq(
            Sum((term(-23, Pow(7, "beta", 2, -1)), _C(-13),
                 term(6, _pow3("a3"), Pow(7, "b3")))),
            _dom("beta", 1), _dom("a3", 0, 2), _dom("b3", 0),
        ),
        49, ["p=7:D1=7,D2=9:alpha=1"],
    ))
    return entries


def _master5(d1, d2, d3):
    """-A*B - 3A - 5B + 1 + 8(d1+d2+d3) with A = 3^2a, B = 5^2b: the exact
    divisor-sum condition for p = 5."""
    A = Pow(3, "alpha", 2, 0)
    B = Pow(5, "beta", 2, 0)
    return Sum((
        term(-1, A, B), term(-3, A), term(-5, B), _C(1),
        term(8, d1), term(8, d2), term(8, d3),
    ))


def _div35(avar, bvar):
    return Prod((_pow3(avar), Pow(5, bvar)))


def _case8() -> list[CaseEntry]:
    entries: list[CaseEntry] = []
    add = entries.append
    inv9 = F(1, 9)

    add(_chain(
        "C8.D1cut", "p=5: D1 below 25, so D1 in {3, 5, 9, 15}",
        (5,), (F(15, 8), F(1, 25), F(1, 27), F(1, 45)),
        ["case8:D1cut"], cut=CofactorCut((), 25),
    ))
    add(_residue(
        "C8.A4", "p=5: all three divisors divisible by 5 is impossible "
        "mod 5", (5,),
        _eq(
            _master5(_div35("a1", "b1"), _div35("a2", "b2"),
                     _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 0), _dom("b1", 1), _dom("a2", 0), _dom("b2", 1),
            _dom("a3", 0), _dom("b3", 1),
        ),
        5, ["p=5:all-b-positive"],
    ))
    add(_residue(
        "C8.A5a", "p=5: all three divisors powers of 5 (d3 = 1 after the "
        "previous entry) is impossible mod 5", (5,),
        _eq(
            _master5(Pow(5, "b1"), Pow(5, "b2"), _C(1)),
            _dom("alpha", 1), _dom("beta", 1), _dom("b1", 2), _dom("b2", 1),
        ),
        5, ["p=5:all-a-zero"],
    ))
    add(_residue(
        "C8.A5b", "p=5: all three divisors divisible by 3 is impossible "
        "mod 3", (5,),
        _eq(
            _master5(_div35("a1", "b1"), _div35("a2", "b2"),
                     _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 0), _dom("a2", 1), _dom("b2", 0),
            _dom("a3", 1), _dom("b3", 0),
        ),
        3, ["p=5:all-a-positive"],
    ))
    add(_sign(
        "C8.D1eq3", "p=5, D1=3: (3^(2a-1) - 1)(5^(2b+1) - 9) - 8 + "
        "8*(d2 + d3) > 0", (5,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, -1), _C(-1))),
                    Sum((Pow(5, "beta", 2, 1), _C(-9))),
                )),
                _C(-8),
                term(8, Var("d2")),
                term(8, Var("d3")),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("d2", 3), _dom("d3", 1),
        ),
        ["p=5:D1=3"],
    ))
    add(_sign(
        "C8.D1eq5", "p=5, D1=5: (3^(2a+1) - 25)(5^(2b-1) - 1) - 24 + "
        "8*(d2 + d3) > 0", (5,),
        _eq(
            Sum((
                Prod((
                    Sum((Pow(3, "alpha", 2, 1), _C(-25))),
                    Sum((Pow(5, "beta", 2, -1), _C(-1))),
                )),
                _C(-24),
                term(8, Var("d2")),
                term(8, Var("d3")),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("d2", 3), _dom("d3", 1),
        ),
        ["p=5:D1=5"],
    ))

    # Remaining sub-cases are indexed by which divisor exponents of 3
    # vanish (zp1: a3=0 only; zp2: a2=0 only; zp3: a1=0 only; zp4: a1=a2=0;
    # zp5: a1=a3=0; zp6: a2=a3=0).  D1 in {3,5} is hoisted above; D1 in
    # {9,15} pins (a1,b1) = (2a-2,2b) or (2a-1,2b-1), so b1 >= 1 and, with
    # the all-divisible-by-5 entry, the remaining power-of-5 divisor bounds
    # follow.

    # --- zp1: d3 = 5^b3, a1, a2 >= 1 ---
    add(_residue(
        "C8.zp1.parity", "p=5, only a3=0: b3 even is impossible mod 3", (5,),
        _eq(
            _master5(_div35("a1", "b1"), _div35("a2", "b2"), Pow(5, "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 0), _dom("a2", 1), _dom("b2", 0),
            _dom("b3", 0, None, 2),
        ),
        3, ["p=5:zp1:parity"],
    ))
    # normalized by -1/n: 1/9 + 3*5^-2b + 5*3^-2a - 3^-2a 5^-2b
    #                     - 8*3^-u 5^-2b - 8*3^-2a 5^-w   (u=2a-a2, w=2b-b3)
    add(_sign(
        "C8.zp1.9a", "p=5, zp1, D1=9, b>=2: the divisor-sum defect, "
        "normalized by n, is at least about 0.0785", (5,),
        _eq(
            Sum((
                _C(inv9),
                term(3, Pow(5, "beta", -2, 0)),
                term(5, Pow(3, "alpha", -2, 0)),
                term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
                term(-8, Pow(3, "u", -1, 0), Pow(5, "beta", -2, 0)),
                term(-8, Pow(3, "alpha", -2, 0), Pow(5, "w", -1, 0)),
            )),
            _dom("alpha", 2), _dom("beta", 2), _dom("u", 0), _dom("w", 1),
        ),
        ["p=5:zp1:D1=9:beta>=2"],
        notes="d2 = 3^a2 by the all-divisible-by-5 entry; b3 odd <= 2b-1",
    ))
    add(_sign(
        "C8.zp1.9b", "p=5, zp1, D1=9, b=1, a2 <= 2a-1: "
        "3^(2a-2)*(24*3^-t - 52) - 84 < 0", (5,),
        _eq(
            Sum((
                Prod((
                    Pow(3, "alpha", 2, -2),
                    Sum((_C(-52), term(24, Pow(3, "t", -1, 0)))),
                )),
                _C(-84),
            )),
            _dom("alpha", 2), _dom("t", 0),
        ),
        ["p=5:zp1:D1=9:beta=1:a2<2alpha"], positive=False,
        notes="t = 2a-1-a2 >= 0; d3 = 5 since b3 is odd and at most 1",
    ))
    add(_residue(
        "C8.zp1.9c", "p=5, zp1, D1=9, b=1, a2=2a: 5*3^(2a-2) - 21 = 0 is "
        "impossible mod 5", (5,),
        _eq(
            Sum((term(5, Pow(3, "alpha", 2, -2)), _C(-21))),
            _dom("alpha", 2),
        ),
        5, ["p=5:zp1:D1=9:beta=1:a2=2alpha"],
    ))
    _g15 = lambda udom, wdom, adom, bdom: _eq(
        Sum((
            _C(F(7, 15)),
            term(3, Pow(5, "beta", -2, 0)),
            term(5, Pow(3, "alpha", -2, 0)),
            term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
            term(-8, Pow(3, "u", -1, 0), Pow(5, "beta", -2, 0)),
            term(-8, Pow(3, "alpha", -2, 0), Pow(5, "w", -1, 0)),
        )),
        adom, bdom, udom, wdom,
    )
    add(_sign(
        "C8.zp1.15a", "p=5, zp1, D1=15, a>=2: normalized defect at least "
        "about 0.126", (5,),
        _g15(_dom("u", 0), _dom("w", 1), _dom("alpha", 2), _dom("beta", 1)),
        ["p=5:zp1:D1=15:alpha>=2"],
    ))
    add(_sign(
        "C8.zp1.15b", "p=5, zp1, D1=15, a=1, b>=2: normalized defect "
        "strictly positive", (5,),
        _g15(_dom("u", 0), _dom("w", 1), _dom("alpha", 1, 1), _dom("beta", 2)),
        ["p=5:zp1:D1=15:alpha=1:beta>=2"],
    ))
    add(_sign(
        "C8.zp1.15c", "p=5, zp1, D1=15, a=b=1: 8*3^a2 - 216 < 0", (5,),
        _eq(Sum((_C(-216), term(8, _pow3("a2")))), _dom("a2", 1, 2)),
        ["p=5:zp1:D1=15:alpha=1:beta=1"], positive=False,
    ))

    # --- zp2: d2 = 5^b2, a1, a3 >= 1 ---
    add(_residue(
        "C8.zp2.parity", "p=5, only a2=0: b2 even is impossible mod 3", (5,),
        _eq(
            _master5(_div35("a1", "b1"), Pow(5, "b2"), _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 0), _dom("b2", 0, None, 2),
            _dom("a3", 1), _dom("b3", 0),
        ),
        3, ["p=5:zp2:parity"],
    ))
    _g9 = lambda adom, bdom: _eq(
        Sum((
            _C(inv9),
            term(3, Pow(5, "beta", -2, 0)),
            term(5, Pow(3, "alpha", -2, 0)),
            term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
            term(-8, Pow(3, "alpha", -2, 0), Pow(5, "w", -1, 0)),
            term(-8, Pow(3, "u", -1, 0), Pow(5, "beta", -2, 0)),
        )),
        adom, bdom, _dom("u", 0), _dom("w", 1),
    )
    add(_sign(
        "C8.zp2.9a", "p=5, zp2, D1=9, b>=2: normalized defect positive",
        (5,), _g9(_dom("alpha", 2), _dom("beta", 2)),
        ["p=5:zp2:D1=9:beta>=2"],
        notes="w = 2b-b2 >= 1, u = 2a-a3 >= 0; d3 = 3^a3 by the "
        "all-divisible-by-5 entry",
    ))
    add(_sign(
        "C8.zp2.9b", "p=5, zp2, D1=9, b=1: -52*3^(2a-2) - 60 < 0 (d2=5, "
        "d3=3)", (5,),
        _eq(
            Sum((term(-52, Pow(3, "alpha", 2, -2)), _C(-60))),
            _dom("alpha", 2),
        ),
        ["p=5:zp2:D1=9:beta=1"], positive=False,
    ))
    add(_sign(
        "C8.zp2.15a", "p=5, zp2, D1=15, a>=2: normalized defect positive",
        (5,),
        _g15(_dom("u", 0), _dom("w", 1), _dom("alpha", 2), _dom("beta", 1)),
        ["p=5:zp2:D1=15:alpha>=2"],
    ))
    add(_sign(
        "C8.zp2.15b", "p=5, zp2, D1=15, a=1, b>=2: normalized defect "
        "positive", (5,),
        _g15(_dom("u", 0), _dom("w", 1), _dom("alpha", 1, 1), _dom("beta", 2)),
        ["p=5:zp2:D1=15:alpha=1:beta>=2"],
    ))
    add(_sign(
        "C8.zp2.15c", "p=5, zp2, D1=15, a=b=1: the condition evaluates to "
        "the nonzero constant -192 (d1=15, d2=5, d3=3)", (5,),
        _eq(_C(-192)),
        ["p=5:zp2:D1=15:alpha=1:beta=1"], positive=False,
    ))

    # --- zp3: d1 = 5^b1, a2, a3 >= 1 ---
    add(_residue(
        "C8.zp3.parity", "p=5, only a1=0: b1 even is impossible mod 3", (5,),
        _eq(
            _master5(Pow(5, "b1"), _div35("a2", "b2"), _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("b1", 0, None, 2), _dom("a2", 1), _dom("b2", 0),
            _dom("a3", 1), _dom("b3", 0),
        ),
        3, ["p=5:zp3:parity"],
    ))
    add(_sign(
        "C8.zp3.main", "p=5, zp3, b1 odd: with d1 = 5^b1 <= 5^(2b-1) and "
        "d2 + d3 < 2*d1 the normalized defect stays positive", (5,),
        _eq(
            Sum((
                _C(1),
                term(3, Pow(5, "beta", -2, 0)),
                term(5, Pow(3, "alpha", -2, 0)),
                term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
                term(-24, Pow(3, "alpha", -2, 0), Pow(5, "m", -1, 0)),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("m", 1),
        ),
        ["p=5:zp3:main"],
        notes="m = 2b-b1 >= 1 since b1 odd; d1+d2+d3 <= 3*d1",
    ))

    # --- zp4: d1 = 5^b1, d2 = 5^b2, a3 >= 1 ---
    add(_residue(
        "C8.zp4.parity1", "p=5, a1=a2=0, b1 odd: impossible mod 3", (5,),
        _eq(
            _master5(Pow(5, "b1"), Pow(5, "b2"), _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("b1", 1, None, 2), _dom("b2", 0),
            _dom("a3", 1), _dom("b3", 0),
        ),
        3, ["p=5:zp4:parity-b1"],
    ))
    add(_residue(
        "C8.zp4.parity2", "p=5, a1=a2=0, b1 even, b2 odd: impossible mod 3",
        (5,),
        _eq(
            _master5(Pow(5, "b1"), Pow(5, "b2"), _div35("a3", "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("b1", 0, None, 2), _dom("b2", 1, None, 2),
            _dom("a3", 1), _dom("b3", 0),
        ),
        3, ["p=5:zp4:parity-b2"],
    ))
    add(_sign(
        "C8.zp4.main", "p=5, zp4, b1 and b2 even: normalized defect at "
        "least 8/225", (5,),
        _eq(
            Sum((
                _C(1),
                term(3, Pow(5, "beta", -2, 0)),
                term(5, Pow(3, "alpha", -2, 0)),
                term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
                term(-8, Pow(3, "alpha", -2, 0), Pow(5, "w1", -1, 0)),
                term(-16, Pow(3, "alpha", -2, 0), Pow(5, "w2", -1, 0)),
            )),
            _dom("alpha", 1), _dom("beta", 1), _dom("w1", 0), _dom("w2", 2),
        ),
        ["p=5:zp4:main"],
        notes="w1 = 2b-b1 >= 0, w2 = 2b-b2 >= 2 (both even, b2 < b1); "
        "d3 < d2 so d1+d2+d3 <= d1 + 2*d2",
    ))

    # --- zp5: d1 = 5^b1, d3 = 5^b3, a2 >= 1 ---
    add(_residue(
        "C8.zp5.parity1", "p=5, a1=a3=0, b1 odd: impossible mod 3", (5,),
        _eq(
            _master5(Pow(5, "b1"), _div35("a2", "b2"), Pow(5, "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("b1", 1, None, 2), _dom("a2", 1), _dom("b2", 0),
            _dom("b3", 0),
        ),
        3, ["p=5:zp5:parity-b1"],
    ))
    add(_residue(
        "C8.zp5.parity2", "p=5, a1=a3=0, b1 even, b3 odd: impossible mod 3",
        (5,),
        _eq(
            _master5(Pow(5, "b1"), _div35("a2", "b2"), Pow(5, "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("b1", 0, None, 2), _dom("a2", 1), _dom("b2", 0),
            _dom("b3", 1, None, 2),
        ),
        3, ["p=5:zp5:parity-b3"],
    ))
    add(_sign(
        "C8.zp5.a", "p=5, zp5, a>=2: with d2 < d1 and b3 < b1 the "
        "normalized defect stays positive", (5,),
        _eq(
            Sum((
                _C(1),
                term(3, Pow(5, "beta", -2, 0)),
                term(5, Pow(3, "alpha", -2, 0)),
                term(-1, Pow(3, "alpha", -2, 0), Pow(5, "beta", -2, 0)),
                term(-16, Pow(3, "alpha", -2, 0), Pow(5, "w1", -1, 0)),
                term(-8, Pow(3, "alpha", -2, 0), Pow(5, "w3", -1, 0)),
            )),
            _dom("alpha", 2), _dom("beta", 1), _dom("w1", 0), _dom("w3", 1),
        ),
        ["p=5:zp5:alpha>=2"],
        notes="d1+d2+d3 <= 2*d1 + d3; w1 = 2b-b1, w3 = 2b-b3 >= 1",
    ))
    add(_residue(
        "C8.zp5.b", "p=5, zp5, a=1, b2=0: impossible mod 5 (b1, b3 even "
        "by parity, b1 >= 2, a2 in {1,2})", (5,),
        _eq(
            _master5(Pow(5, "b1"), _pow3("a2"), Pow(5, "b3")),
            _dom("alpha", 1, 1), _dom("beta", 1),
            _dom("b1", 2, None, 2), _dom("a2", 1, 2),
            _dom("b3", 0, None, 2),
        ),
        5, ["p=5:zp5:alpha=1:b2=0"],
    ))
    add(_residue(
        "C8.zp5.c", "p=5, zp5, a=1, b3=0, b2>=1: impossible mod 5", (5,),
        _eq(
            _master5(Pow(5, "b1"), _div35("a2", "b2"), _C(1)),
            _dom("alpha", 1, 1), _dom("beta", 1),
            _dom("b1", 2, None, 2), _dom("a2", 1, 2), _dom("b2", 1),
        ),
        5, ["p=5:zp5:alpha=1:b3=0"],
        notes="the not-all-divisible-by-5 entry forces b2 = 0 or b3 = 0",
    ))

    # --- zp6: d2 = 5^b2, d3 = 5^b3, a1 >= 1 ---
    add(_residue(
        "C8.zp6.parity1", "p=5, a2=a3=0, b2 odd: impossible mod 3", (5,),
        _eq(
            _master5(_div35("a1", "b1"), Pow(5, "b2"), Pow(5, "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 0), _dom("b2", 1, None, 2),
            _dom("b3", 0),
        ),
        3, ["p=5:zp6:parity-b2"],
    ))
    add(_residue(
        "C8.zp6.parity2", "p=5, a2=a3=0, b2 even, b3 odd: impossible mod 3",
        (5,),
        _eq(
            _master5(_div35("a1", "b1"), Pow(5, "b2"), Pow(5, "b3")),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 0), _dom("b2", 0, None, 2),
            _dom("b3", 1, None, 2),
        ),
        3, ["p=5:zp6:parity-b3"],
    ))
    add(_residue(
        "C8.zp6.main", "p=5, zp6, b2 even >= 2, b3 = 0: impossible mod 5 "
        "(b1 >= 1 since D1 in {9,15}; b3 >= 2 falls to the all-divisible-"
        "by-5 entry)", (5,),
        _eq(
            _master5(_div35("a1", "b1"), Pow(5, "b2"), _C(1)),
            _dom("alpha", 1), _dom("beta", 1),
            _dom("a1", 1), _dom("b1", 1), _dom("b2", 2, None, 2),
        ),
        5, ["p=5:zp6:main"],
    ))
    return entries


SHIPPED_LEDGER: list[CaseEntry] = build_ledger()
