"""Demo: exact pattern counting, the far-pattern fraction, and bounds.

Counting is exact big-integer arithmetic, so desk-scale numbers can be
checked against brute force, while the same formulas evaluate instantly
at n = 10^4 and beyond.
"""

from delcodes import (BOUND_EVALUATORS, count_burst_patterns,
                      count_far_patterns, count_patterns, far_fraction)

print("pattern counts (n=12):")
for t in range(4):
    print(f"  at most {t} errors: {count_patterns(12, t)}")
print(f"  9-far, up to 2 errors: {count_far_patterns(12, 9, 2)}")
print(f"  bursts of spread <= 1 (n=9): {count_burst_patterns(9, 1)}")
print()

print("fraction of <=t patterns that are 3*P_n-far (P_n = n / (t^2 w)):")
for n, t, omega in ((10_000, 2, 100), (100_000, 3, 50), (10 ** 6, 5, 100)):
    frac, target = far_fraction(n, t, omega)
    print(f"  n={n:>7}, t={t}, omega={omega:>3}: fraction {frac:.4f} "
          f"(guarantee target {target:.2f})")
print()

print("redundancy bound evaluators (value + applicability):")
samples = {
    "rep_bounds": (9, 1),
    "any_code_lower": (10 ** 5, 3),
    "delta": (5,),
    "far_upper": (10 ** 4, 10),
    "far_lower": (10 ** 6, 10),
    "burst_lower": (10 ** 6, 2),
}
for name, args in samples.items():
    report = BOUND_EVALUATORS[name](*args)
    value = report.value
    if isinstance(value, list):
        value = f"[{value[0]:.3f}, {value[1]:.3f}]"
    else:
        value = f"{value:.3f}"
    print(f"  {name}{args}: {value}  ({report.applicability})")
