# %% [markdown]
# Kloosterman-Bessel series
# -------------------------
# Coefficients of Maass-Poincare series are absolutely convergent sums over
# c of Kloosterman sums times Bessel functions. Truncating at cmax gives a
# value plus a heuristic error.
#
#     python demos/03_mock_coefficients.py [cmax]

# %%
import math
import sys
from fractions import Fraction

from hecke_zeros.modforms import jinv
from hecke_zeros.specialfn import kloosterman, mock_delta_coeff, poincare_const, poincare_cplus

cmax = int(sys.argv[1]) if len(sys.argv) > 1 else 2000

# %% Kloosterman sums are real and obey the Weil bound at primes
for p in (5, 13, 97):
    K = kloosterman(1, 1, p).value
    print(f"K(1,1,{p}) = {K:+.6f}   2 sqrt(p) = {2 * math.sqrt(p):.4f}")

# %% Weight 0: the q^1 coefficient rebuilds 196884
c1 = poincare_cplus(2, 1, 1, cmax)
print(f"weight 0, c(1) = {c1.value:.4f} +- {c1.abs_err:.2g}   (j: {jinv(2)[1]})")

# %% Weight -10: the constant term is 24/B_12 = -65520/691
c0 = poincare_const(12, 1, cmax)
print(f"constant term = {c0.value:.10f}   exact {float(Fraction(-65520, 691)):.10f}")

# %% Coefficients of the mock modular form attached to Delta
for n in (1, 2):
    a = mock_delta_coeff(n, cmax)
    print(f"a({n}) = {a.value:.4f} +- {a.abs_err:.2g}  (cmax={cmax})")
