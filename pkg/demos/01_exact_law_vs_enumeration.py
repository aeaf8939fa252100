"""
Exact spacing law on a small grid, three ways
=============================================

Thin the 7-point grid {0, 1/6, ..., 1} with survival probability 1/3 and
look at the second spacing (the gap between the 2nd and 3rd survivors).
The conditional law is computed by

  1. brute-force enumeration of all 2**7 survival patterns (exact rationals),
  2. the closed-form expression (exact rationals),
  3. the log-domain floating evaluation used for large grids,

and the three tables are printed side by side.
"""

from fractions import Fraction

import spacings as sp

n, p, i = 6, Fraction(1, 3), 2

enumerated = sp.enumerate_conditional_pmf(n, p, i)
closed = sp.exact_closed_form_pmf(n, p, i)
floating = sp.spacing_distribution(sp.ModelParams(n, float(p), i))

print(f"conditional pmf of spacing {i} on grid({n}), p = {p}\n")
print(f"{'d':>3} {'enumerated':>12} {'closed form':>12} {'log-domain':>22}")
for d in range(1, n + 1):
    print(
        f"{d:>3} {str(enumerated.mass(d)):>12} {str(closed.mass(d)):>12}"
        f" {floating.mass[d - 1]:>22.17g}"
    )

assert enumerated.masses == closed.masses
print("\nenumeration and closed form agree term by term, exactly.")

worst = max(
    abs(float(enumerated.mass(d)) - floating.mass[d - 1]) for d in range(1, n + 1)
)
print(f"largest float deviation from the exact rationals: {worst:.3e}")

# the mass vanishes exactly once there is no room for i earlier survivors
print(f"\nsupport cutoff: mass is zero for d > n - i + 1 = {n - i + 1}")
