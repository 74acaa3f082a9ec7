# %% [markdown]
# Exact q-expansions
# ------------------
# Everything here is rational arithmetic on truncated Laurent series. A series
# remembers how far it is known, and products only keep what both factors
# determine.

# %%
from fractions import Fraction

from hecke_zeros.modforms import delta, divisor_polynomial, eisenstein, faber, jinv
from hecke_zeros.qseries import QSeries

N = 12
E4, E6 = eisenstein(4, N), eisenstein(6, N)
print("E4 =", E4)
print("E6 =", E6)

# %% 1728 Delta = E4^3 - E6^2, and Delta is Ramanujan's tau series
D = delta(N)
assert E4 ** 3 - E6 ** 2 == D.scale(1728)
print("tau(1..6) =", [int(D[n]) for n in range(1, 7)])

# %% j = E4^3 / Delta has a simple pole at the cusp
j = jinv(N)
print("j =", j)

# %% Precision is tracked, not assumed
a = QSeries.from_list([1, 1], -1, 0)  # q^-1 + 1 + O(q)
print("(q^-1 + 1 + O(q))^2 =", a * a)

# %% Faber polynomials: J_n(j) = q^-n + O(q)
for n in (1, 2, 3):
    series, J = faber(n, 4)
    print(f"J_{n}(x) = {J}")
    print(f"   J_{n}(j) = {series}")

# %% Divisor polynomial of E12: its one non-elliptic zero sits at j = 432000/691
P = divisor_polynomial(eisenstein(12, 10), 12)
print("P(E12; x) =", P, " root", -P.coeffs[0], "=", float(-P.coeffs[0]))
assert -P.coeffs[0] == Fraction(432000, 691)
