"""Machine-checkable proof obligations over exact rational arithmetic.

Four obligation shapes cover the whole case analysis:

* bound chains: finite sums of exact rationals strictly compared to 2;
* interval certificates for linear-fractional forms F(x) = (a*x+b)/(c*x+e)
  evaluated at x = p^(stride*v+offset), certified for ALL v >= vmin via
  monotonicity (the sign of a*e - b*c) plus the endpoint and the limit;
* residue-cycle contradictions: an exponential equation is shown to have
  no root modulo m by exhausting one full period of every power term;
* bounded exponent searches: exact enumeration of all solutions with
  every exponent variable capped (default 50).

Decimal strings are produced only for display; every comparison is done
on Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Verdict",
    "VerdictStatus",
    "decimal_prefix",
    "abundancy_upper_bound",
    "eval_bound_chain",
    "MoebiusForm",
    "PowTarget",
    "UnsupportedFormError",
    "moebius_interval_check",
    "Interval",
    "Var",
    "Const",
    "Pow",
    "Sum",
    "Prod",
    "VarDomain",
    "ExpEquation",
    "residue_cycle_check",
    "bounded_exponent_search",
    "sign_by_bounds",
]


class VerdictStatus(Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Verdict:
    entry_id: str
    status: VerdictStatus
    evidence: str
    candidates: tuple[int, ...] = ()
    solutions: tuple[dict[str, int], ...] = ()


def decimal_prefix(q: Fraction, digits: int = 4) -> str:
    """First `digits` digits of q's exact decimal expansion (truncated)."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, rem = divmod(q.numerator, q.denominator)
    out = [sign, str(whole), "."]
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, q.denominator)
        out.append(str(d))
    return "".join(out)


def abundancy_upper_bound(p1: int, p2: int) -> Fraction:
    """Strict upper bound p1*p2 / ((p1-1)(p2-1)) for sigma(n)/n when
    n = p1^a * p2^b with 2 < p1 < p2."""
    if not (2 < p1 < p2):
        raise ValueError(f"need 2 < p1 < p2, got {p1}, {p2}")
    return Fraction(p1 * p2, (p1 - 1) * (p2 - 1))


def eval_bound_chain(
    terms: Sequence[Fraction],
) -> tuple[Fraction, bool, str]:
    """Exact sum of the terms, whether it is strictly below 2, and a
    4-digit decimal prefix for display (never used in the comparison)."""
    if not terms:
        raise ValueError("bound chain needs at least one term")
    total = sum(terms, Fraction(0))
    return total, total < 2, decimal_prefix(total)


# ---------------------------------------------------------------------------
# Linear-fractional interval certificates


class UnsupportedFormError(ValueError):
    """The form cannot be certified by the monotone endpoint+limit scheme."""


@dataclass(frozen=True)
class MoebiusForm:
    """F(v) = (a*x + b) / (c*x + e) with x = base^(stride*v + offset)."""

    a: int
    b: int
    c: int
    e: int
    base: int
    stride: int = 2
    offset: int = 0
    vmin: int = 1

    def __post_init__(self) -> None:
        if self.base < 2 or self.stride < 1:
            raise ValueError("base >= 2 and stride >= 1 required")
        if self.stride * self.vmin + self.offset < 0:
            raise ValueError("negative exponent at vmin")

    def x(self, v: int) -> int:
        return self.base ** (self.stride * v + self.offset)

    def value(self, v: int) -> Fraction:
        x = self.x(v)
        den = self.c * x + self.e
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at v={v}")
        return Fraction(self.a * x + self.b, den)

    @property
    def determinant(self) -> int:
        return self.a * self.e - self.b * self.c


@dataclass(frozen=True)
class PowTarget:
    """The attainable values base^(stride*v + offset) for v >= vmin; used
    to decide whether an interval can contain the integer side of an
    equation such as 3^(2a-3)."""

    base: int
    stride: int = 2
    offset: int = 0
    vmin: int = 1

    def __post_init__(self) -> None:
        if self.base < 2 or self.stride < 1:
            raise ValueError("base >= 2 and stride >= 1 required")

    def attainable_in(self, low: Fraction, high: Fraction) -> list[Fraction]:
        """Attainable values strictly inside (low, high); exact Fractions
        so negative exponents are handled."""
        vals = []
        v = self.vmin
        while True:
            e = self.stride * v + self.offset
            val = Fraction(self.base) ** e
            if val >= high:
                break
            if val > low:
                vals.append(val)
            v += 1
        return vals


def moebius_interval_check(
    form: MoebiusForm,
    low: Fraction,
    high: Fraction,
    target: PowTarget | None = None,
    entry_id: str = "",
) -> Verdict:
    """Certify F(v) in (low, high) for every v >= vmin, then check the
    interval excludes all attainable target values (all integers when no
    target pattern is given).

    Certification: x is strictly increasing in v, the denominator keeps
    one sign for x >= x(vmin), so F is monotone with direction given by
    sign(a*e - b*c).  The attained extreme F(vmin) must lie strictly
    inside, the limit a/c may touch the closure.
    """
    low, high = Fraction(low), Fraction(high)
    if low >= high:
        raise ValueError("empty interval")
    if form.c == 0:
        if form.a != 0:
            raise UnsupportedFormError("unbounded affine form (c=0, a!=0)")
        val = Fraction(form.b, form.e)
        if not (low < val < high):
            return Verdict(entry_id, VerdictStatus.REFUTED, f"constant {val} outside")
        return _exclusion_verdict(entry_id, low, high, target, f"constant {val}")
    x0 = form.x(form.vmin)
    den0 = form.c * x0 + form.e
    if den0 == 0 or (form.c > 0) != (den0 > 0):
        # c*x + e changes sign (or vanishes) somewhere in x >= x0
        raise UnsupportedFormError("denominator sign is not stable for v >= vmin")
    first = form.value(form.vmin)
    limit = Fraction(form.a, form.c)
    det = form.determinant
    if not (low < first < high):
        return Verdict(
            entry_id,
            VerdictStatus.REFUTED,
            f"F(vmin)={first} is outside ({low}, {high})",
        )
    if det == 0:
        evidence = f"constant F={first}"
    elif det > 0:
        # increasing toward the limit
        if limit > high:
            return Verdict(
                entry_id, VerdictStatus.REFUTED, f"limit {limit} exceeds {high}"
            )
        evidence = f"F(vmin)={first} increasing to {limit}"
    else:
        if limit < low:
            return Verdict(
                entry_id, VerdictStatus.REFUTED, f"limit {limit} below {low}"
            )
        evidence = f"F(vmin)={first} decreasing to {limit}"
    return _exclusion_verdict(entry_id, low, high, target, evidence)


def _exclusion_verdict(
    entry_id: str,
    low: Fraction,
    high: Fraction,
    target: PowTarget | None,
    membership_evidence: str,
) -> Verdict:
    if target is None:
        lo_int = low.numerator // low.denominator + 1
        candidates = [i for i in range(lo_int, high.numerator // high.denominator + 1)
                      if low < i < high]
    else:
        candidates = target.attainable_in(low, high)
    if not candidates:
        return Verdict(
            entry_id,
            VerdictStatus.PROVED,
            f"{membership_evidence}; ({low}, {high}) excludes the integer side",
        )
    return Verdict(
        entry_id,
        VerdictStatus.INCONCLUSIVE,
        f"{membership_evidence}; candidates {candidates} remain in ({low}, {high})",
        candidates=tuple(candidates),
    )


# ---------------------------------------------------------------------------
# Exponential expressions: exact evaluation, interval bounds, residues


_INF = object()  # +infinity sentinel for interval endpoints


def _emul(a, b):
    """Extended multiplication where endpoints may be +/-'inf' markers."""
    a_inf = isinstance(a, tuple)
    b_inf = isinstance(b, tuple)
    if not a_inf and not b_inf:
        return a * b
    sign_a = a[0] if a_inf else (0 if a == 0 else (1 if a > 0 else -1))
    sign_b = b[0] if b_inf else (0 if b == 0 else (1 if b > 0 else -1))
    s = sign_a * sign_b
    if s == 0:
        return Fraction(0)
    return (s,)


def _elt(a, b) -> bool:
    """a < b on extended rationals ((-1,) = -inf, (1,) = +inf)."""
    if isinstance(a, tuple):
        return a[0] < 0 and not (isinstance(b, tuple) and b[0] < 0)
    if isinstance(b, tuple):
        return b[0] > 0
    return a < b


@dataclass(frozen=True)
class Interval:
    """Closed interval over extended rationals; endpoints are Fractions or
    (-1,) / (1,) infinity markers."""

    lo: object
    hi: object

    def __add__(self, other: "Interval") -> "Interval":
        def eadd(x, y):
            if isinstance(x, tuple):
                return x
            if isinstance(y, tuple):
                return y
            return x + y

        return Interval(eadd(self.lo, other.lo), eadd(self.hi, other.hi))

    def __mul__(self, other: "Interval") -> "Interval":
        prods = [
            _emul(x, y)
            for x in (self.lo, self.hi)
            for y in (other.lo, other.hi)
        ]
        lo = prods[0]
        hi = prods[0]
        for p in prods[1:]:
            if _elt(p, lo):
                lo = p
            if _elt(hi, p):
                hi = p
        return Interval(lo, hi)

    def scaled(self, q: Fraction) -> "Interval":
        return self * Interval(q, q)


POS_INF = (1,)
NEG_INF = (-1,)


@dataclass(frozen=True)
class VarDomain:
    """Integer variable ranging over lo, lo+step, lo+2*step, ... (<= hi)."""

    name: str
    lo: int
    hi: int | None = None
    step: int = 1

    def __post_init__(self) -> None:
        if self.step < 1 or (self.hi is not None and self.hi < self.lo):
            raise ValueError(f"bad domain for {self.name}")

    def values(self, cap: int | None = None) -> Iterable[int]:
        hi = self.hi
        if cap is not None:
            hi = cap if hi is None else min(hi, cap)
        if hi is None:
            raise ValueError(f"{self.name} is unbounded; a cap is required")
        return range(self.lo, hi + 1, self.step)


class Expr:
    def eval(self, env: Mapping[str, int]) -> Fraction:
        raise NotImplementedError

    def bounds(self, domains: Mapping[str, VarDomain]) -> Interval:
        raise NotImplementedError

    def variables(self) -> set[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(Expr):
    """A free integer variable (e.g. an otherwise unconstrained divisor)
    bounded only by its domain; not usable in residue-cycle checks."""

    name: str

    def eval(self, env):
        return Fraction(env[self.name])

    def bounds(self, domains):
        dom = domains[self.name]
        hi = POS_INF if dom.hi is None else Fraction(dom.hi)
        return Interval(Fraction(dom.lo), hi)

    def variables(self):
        return {self.name}


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))

    def eval(self, env):
        return self.value

    def bounds(self, domains):
        return Interval(self.value, self.value)

    def variables(self):
        return set()


@dataclass(frozen=True)
class Pow(Expr):
    """base^(stride*var + offset); exact Fraction when the exponent is
    negative."""

    base: int
    var: str
    stride: int = 1
    offset: int = 0

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError("base >= 2 required")

    def exponent(self, v: int) -> int:
        return self.stride * v + self.offset

    def eval(self, env):
        return Fraction(self.base) ** self.exponent(env[self.var])

    def bounds(self, domains):
        dom = domains[self.var]
        if self.stride == 0:
            val = Fraction(self.base) ** self.offset
            return Interval(val, val)
        e_at_lo = self.exponent(dom.lo)
        e_at_hi = None if dom.hi is None else self.exponent(dom.hi)
        if self.stride > 0:
            e_lo, e_hi = e_at_lo, e_at_hi
        else:
            e_lo, e_hi = e_at_hi, e_at_lo
        # base^e is increasing in e; base^(-inf) has infimum 0 (sound as a
        # closed lower endpoint), base^(+inf) is unbounded.
        lo = Fraction(0) if e_lo is None else Fraction(self.base) ** e_lo
        hi = POS_INF if e_hi is None else Fraction(self.base) ** e_hi
        return Interval(lo, hi)

    def variables(self):
        return {self.var}


@dataclass(frozen=True)
class Sum(Expr):
    children: tuple[Expr, ...]

    def eval(self, env):
        return sum((c.eval(env) for c in self.children), Fraction(0))

    def bounds(self, domains):
        total = Interval(Fraction(0), Fraction(0))
        for c in self.children:
            total = total + c.bounds(domains)
        return total

    def variables(self):
        return set().union(*(c.variables() for c in self.children)) if self.children else set()


@dataclass(frozen=True)
class Prod(Expr):
    children: tuple[Expr, ...]

    def eval(self, env):
        out = Fraction(1)
        for c in self.children:
            out *= c.eval(env)
        return out

    def bounds(self, domains):
        total = Interval(Fraction(1), Fraction(1))
        for c in self.children:
            total = total * c.bounds(domains)
        return total

    def variables(self):
        return set().union(*(c.variables() for c in self.children)) if self.children else set()


def term(coeff, *atoms: Expr) -> Expr:
    """coeff * atom1 * atom2 * ... convenience constructor."""
    coeff = Fraction(coeff)
    if not atoms:
        return Const(coeff)
    if coeff == 1 and len(atoms) == 1:
        return atoms[0]
    return Prod((Const(coeff),) + tuple(atoms))


@dataclass(frozen=True)
class ExpEquation:
    """Assertion that expr == 0 over the given variable domains."""

    expr: Expr
    domains: tuple[VarDomain, ...]

    def __post_init__(self) -> None:
        names = [d.name for d in self.domains]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable domains")
        missing = self.expr.variables() - set(names)
        if missing:
            raise ValueError(f"no domain for {sorted(missing)}")

    def domain_map(self) -> dict[str, VarDomain]:
        return {d.name: d for d in self.domains}


def _collect_pows(expr: Expr) -> list[Pow]:
    if isinstance(expr, Pow):
        return [expr]
    if isinstance(expr, (Sum, Prod)):
        out = []
        for c in expr.children:
            out.extend(_collect_pows(c))
        return out
    return []


def _contains_var(expr: Expr) -> bool:
    if isinstance(expr, Var):
        return True
    if isinstance(expr, (Sum, Prod)):
        return any(_contains_var(c) for c in expr.children)
    return False


def _residue_representatives(
    var: VarDomain, atoms: Sequence[Pow], modulus: int
) -> list[int]:
    """Variable values whose atom-residue tuples exhaust all reachable
    states.  The tuple sequence is eventually periodic because each entry
    evolves by multiplication with base^(stride*step) mod m."""
    reps: list[int] = []
    seen: set[tuple[int, ...]] = set()
    v = var.lo
    while True:
        if var.hi is not None and v > var.hi:
            break
        state = tuple(pow(a.base % modulus, a.exponent(v), modulus) for a in atoms)
        if state in seen:
            break
        seen.add(state)
        reps.append(v)
        v += var.step
        if len(reps) > 10_000:  # pragma: no cover
            raise ArithmeticError("residue cycle unexpectedly long")
    return reps


def _eval_mod(expr: Expr, env: Mapping[str, int], m: int) -> int:
    if isinstance(expr, Const):
        if expr.value.denominator != 1:
            raise ValueError("residue checks need integer coefficients")
        return expr.value.numerator % m
    if isinstance(expr, Pow):
        e = expr.exponent(env[expr.var])
        if e < 0:
            raise ValueError("negative exponent in residue check")
        return pow(expr.base % m, e, m)
    if isinstance(expr, Sum):
        return sum(_eval_mod(c, env, m) for c in expr.children) % m
    if isinstance(expr, Prod):
        out = 1
        for c in expr.children:
            out = out * _eval_mod(c, env, m) % m
        return out
    raise TypeError(type(expr))


def residue_cycle_check(
    eq: ExpEquation, modulus: int, entry_id: str = ""
) -> Verdict:
    """Prove expr == 0 has no solution by exhausting, for every variable,
    one full period of its power-term residues mod modulus.  Rigorous for
    all exponent values in the declared domains."""
    if modulus < 2:
        raise ValueError("modulus >= 2 required")
    if _contains_var(eq.expr):
        raise ValueError("free Var atoms have no residue cycle")
    pows = _collect_pows(eq.expr)
    by_var: dict[str, list[Pow]] = {d.name: [] for d in eq.domains}
    for p in pows:
        by_var[p.var].append(p)
    rep_lists = [
        _residue_representatives(d, by_var[d.name], modulus) for d in eq.domains
    ]
    names = [d.name for d in eq.domains]
    reached: set[int] = set()
    for combo in itertools.product(*rep_lists):
        env = dict(zip(names, combo))
        r = _eval_mod(eq.expr, env, modulus)
        reached.add(r)
        if r == 0:
            return Verdict(
                entry_id,
                VerdictStatus.REFUTED,
                f"root mod {modulus} at {env}",
            )
    return Verdict(
        entry_id,
        VerdictStatus.PROVED,
        f"no root mod {modulus}; residues reached: {sorted(reached)}",
    )


DEFAULT_EXPONENT_BOUND = 50


def bounded_exponent_search(
    eq: ExpEquation,
    bound: int = DEFAULT_EXPONENT_BOUND,
    entry_id: str = "",
    expected: Sequence[Mapping[str, int]] | None = None,
) -> Verdict:
    """Enumerate every solution of expr == 0 with all variables capped at
    `bound`; deterministic order by variable declaration."""
    names = [d.name for d in eq.domains]
    value_lists = [list(d.values(cap=bound)) for d in eq.domains]
    solutions: list[dict[str, int]] = []
    for combo in itertools.product(*value_lists):
        env = dict(zip(names, combo))
        if eq.expr.eval(env) == 0:
            solutions.append(env)
    sols = tuple(solutions)
    if expected is not None:
        want = [dict(e) for e in expected]
        if solutions != want:
            return Verdict(
                entry_id,
                VerdictStatus.REFUTED,
                f"solutions {solutions} != expected {want}",
                solutions=sols,
            )
    evidence = f"solutions within bound {bound}: {solutions if solutions else 'none'}"
    return Verdict(entry_id, VerdictStatus.PROVED, evidence, solutions=sols)


def sign_by_bounds(
    eq: ExpEquation, positive: bool = True, entry_id: str = ""
) -> Verdict:
    """Prove expr > 0 (or < 0) over the whole domain by exact interval
    bounds, refuting expr == 0."""
    box = eq.expr.bounds(eq.domain_map())
    if positive:
        ok = not isinstance(box.lo, tuple) and box.lo > 0
        side = f"lower bound {box.lo if not isinstance(box.lo, tuple) else '-inf'}"
    else:
        ok = not isinstance(box.hi, tuple) and box.hi < 0
        side = f"upper bound {box.hi if not isinstance(box.hi, tuple) else '+inf'}"
    if ok:
        return Verdict(
            entry_id, VerdictStatus.PROVED, f"sign fixed: {side} {'>' if positive else '<'} 0"
        )
    return Verdict(entry_id, VerdictStatus.INCONCLUSIVE, f"bounds too weak: {side}")
