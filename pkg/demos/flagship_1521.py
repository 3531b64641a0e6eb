"""A guided tour of n = 1521 = 3^2 * 13^2.

This script walks through, step by step, why 1521 carries exactly three
"deficient divisors": three distinct proper divisors d1 > d2 > d3 with

    sigma(n) = 2n - (d1 + d2 + d3).

Run it with:  python3 demos/flagship_1521.py
"""

from deficia import classify_full, divisor_list, factorize, sigma

n = 1521

# ---------------------------------------------------------------------------
# 1. The raw arithmetic.

f = factorize(n)
print(f"n = {n} = " + " * ".join(f"{p}^{e}" for p, e in f.factors))
print(f"divisors: {divisor_list(n)}")

s = sigma(n)
print(f"sigma(n) = {s}")
print(f"2n       = {2 * n}")
print(f"deficiency 2n - sigma(n) = {2 * n - s}")

# ---------------------------------------------------------------------------
# 2. The witness set.  The deficiency 663 must be written as a sum of
#    exactly three distinct proper divisors.  There is precisely one way.

record = classify_full(n, kmax=3)
print(f"\nstatus: {record.status.value}")
for k, sets in sorted(record.witnesses.items()):
    for w in sets:
        parts = " + ".join(str(d) for d in w.divisors)
        print(f"  k={k}: {parts} = {sum(w.divisors)}")
        print(f"       cofactors n/d_i = {w.cofactors}")

assert record.witnesses.get(3) is not None
(w,) = record.witnesses[3]
assert w.divisors == (507, 117, 39)

# ---------------------------------------------------------------------------
# 3. Sanity check the identity by hand.

d1, d2, d3 = w.divisors
print(f"\nsigma(n) + d1 + d2 + d3 = {s + d1 + d2 + d3} = 2n = {2 * n}")
assert s + d1 + d2 + d3 == 2 * n

# Note there is no k=1 or k=2 witness: 663 is not a divisor of 1521, and
# no pair of distinct proper divisors sums to 663 either.
assert 1 not in record.witnesses and 2 not in record.witnesses
print("no k=1 or k=2 witness exists; the count three is exact")
