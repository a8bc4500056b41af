# coding: utf-8

# # Short antichains in root posets
#
# A walk through the counting side of the package: build a root system,
# list its antichains, and compare the counts with the closed formulas.

# In[1]:

from collections import Counter

import numpy as np

from rootposets import build_root_system
from rootposets.posets import (
    bivariate_generating_function,
    closed_form_counts,
    count_antichains,
    enumerate_antichains,
    fibre_histogram,
)


# Start with C2. Roots are written in the basis of simple roots; the
# text dump shows which are long and which are short.

# In[2]:

C2 = build_root_system("C2")
print(C2.to_text())


# Every antichain of the positive-root poset, then only the short ones.

# In[3]:

for a in enumerate_antichains(C2):
    print(a, "short" if a.short else "")

print("short antichains:", count_antichains(C2, "short"))


# Counts for every two-length system up to rank 4, next to the closed forms.

# In[4]:

names = ["B2", "B3", "B4", "C3", "C4", "F4", "G2"]
filters = ["all", "short", "strictly_s_positive", "long", "ss"]
table = np.array([[count_antichains(build_root_system(n), f) for f in filters] for n in names])
print("      " + " ".join(f"{f[:8]:>9}" for f in filters))
for n, row in zip(names, table):
    print(f"{n:5} " + " ".join(f"{x:9d}" for x in row))


# In[5]:

for name in ["C4", "F4"]:
    cf = closed_form_counts(build_root_system(name))
    print(name, {k: (v.value, v.expected) for k, v in cf.items() if v.applicable})


# F4 in more detail: how many antichains have each size, and the joint
# distribution by number of short and long members.

# In[6]:

F4 = build_root_system("F4")
sizes = Counter(len(a.members) for a in enumerate_antichains(F4))
print(sorted(sizes.items()))
print(bivariate_generating_function(F4))
print("fibres over short antichains:", fibre_histogram(F4))
