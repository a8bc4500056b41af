# coding: utf-8

# # Characteristic polynomials of deformed arrangements
#
# The finite-field engine counts points of F_q^p off the hyperplanes for a
# handful of primes q and interpolates. Below: the Coxeter, Catalan and
# semi-Catalan families, then the semi-Shi family where only some cases
# have a known closed form.

# In[1]:

import time

from rootposets import build_root_system
from rootposets.arrangements import (
    build_arrangement,
    cat_s_prediction,
    char_poly,
    char_poly_run,
    char_poly_whitney,
    semi_shi_conjecture_report,
)
from rootposets.polynomials import zaslavsky_counts


# In[2]:

B3 = build_root_system("B3")
for kind, m in [("coxeter", 0), ("cat", 1), ("cat_s", 1), ("cat_s", 2), ("shi_s", 1)]:
    arr = build_arrangement(B3, kind, m)
    chi = char_poly(arr)
    z = zaslavsky_counts(chi, B3.rank)
    print(f"{kind:8} m={m}  {len(arr):3d} hyperplanes  {chi.factored():24}  regions={z['regions']}")


# The intersection-poset engine is exact but slow; at rank 3 it still
# agrees with point counting.

# In[3]:

arr = build_arrangement(B3, "shi_s", 2)
print(char_poly(arr) == char_poly_whitney(arr), char_poly(arr).factored())


# Which primes did the interpolation use, and how long did F4 take?

# In[4]:

F4 = build_root_system("F4")
t0 = time.perf_counter()
run = char_poly_run(build_arrangement(F4, "cat_s", 1))
print(run.chi.factored(), "expected", cat_s_prediction(F4, 1).factored())
print("primes", run.primes, f"{time.perf_counter() - t0:.1f}s")


# Semi-Shi polynomials against the product guess.

# In[5]:

for name, ms in [("C2", [1, 2, 3]), ("G2", [1, 2, 3, 4])]:
    rs = build_root_system(name)
    for m in ms:
        rep = semi_shi_conjecture_report(rs, m)
        print(name, m, rep["chi_factored"], "vs", rep["predicted_factored"], rep["verdict"])
