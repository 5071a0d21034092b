"""Exact closed forms for weighted harmonic sums, and where they lead.

The chain of exact identities for sums like sum H_j/(j+s) feeds directly
into the mod-p^2 lemmas: the shifted harmonic tails appearing there are
where these closed forms earn their keep.
"""
from fractions import Fraction

from bernmod import check, gen_harmonic, harmonic

n = 10
lhs = sum((harmonic(j) / j for j in range(1, n + 1)), Fraction(0))
rhs = (harmonic(n) ** 2 + gen_harmonic(n, 2)) / 2
print(f"sum of H_j/j for j <= {n}:")
print(f"  direct:      {lhs}")
print(f"  closed form: {rhs}")
assert lhs == rhs

print()
print("Shifting the denominator to j + s keeps an exact closed form.")
print("status of the catalog checks at n = 25:")
for ident in ("alzer", "choi_srivastava_s1", "choi_srivastava_s2",
              "choi_srivastava_s3"):
    report = check(ident, {"n": 25})
    print(f"  {ident:<20} {report.status}   both sides = {report.lhs}")

print()
print("The general shifted form covers any s >= 3, as Fractions, exactly:")
for s in (3, 7, 12):
    report = check("prop1", {"n": 25, "s": s})
    print(f"  s={s:<3} {report.status}   value = {report.lhs}")

print()
print("At s = 3 the general form collapses onto the specific one:")
r_general = check("prop1", {"n": 40, "s": 3})
r_specific = check("choi_srivastava_s3", {"n": 40})
print(f"  prop1(n=40, s=3)          = {r_general.lhs}")
print(f"  choi_srivastava_s3(n=40)  = {r_specific.lhs}")
assert r_general.lhs == r_specific.lhs
