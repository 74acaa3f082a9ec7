# %% [markdown]
# Hecke polynomials of a weak eigenform
# -------------------------------------
# The built-in form "R" has principal part q^-1, constant term 24/B_12 and
# shadow proportional to Delta. Its Hecke polynomial P_n is determined by the
# coefficients at exponents <= 0 of n^11 R|T(n) - tau(n) R.

# %%
from hecke_zeros.heckepoly import builtin_R_spec, endpoint_report, hecke_polynomial, hn_lower_part
from hecke_zeros.rpoly import RPoly

R = builtin_R_spec()
print("spec:", R.to_json())

# %% The smallest case by hand: only endpoint zeros
print("H_2 at exponents <= 0:", hn_lower_part(R, 2).terms())
P2 = hecke_polynomial(R, 2).poly
print("P_2(x) =", P2)
assert P2 == RPoly.from_roots([0, 1728])

# %% n = 3 picks up one interior zero, at 768
P3 = hecke_polynomial(R, 3).poly
print("P_3(x) =", P3)
assert P3 == RPoly.from_roots([0, 768, 1728])

# %% Degree n and monic for a range of n
for n in range(2, 13):
    res = hecke_polynomial(R, n)
    print(f"n={n:2d} deg={res.degree:2d} monic={res.poly.is_monic()} zeros at 0/1728: {res.zero_at_0}/{res.zero_at_1728}")

# %% Which endpoints are forced zeros is read off from k mod 12
print(endpoint_report(R, 5))
