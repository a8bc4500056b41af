# coding: utf-8

# # Alcoves, simplices and affine Weyl group elements
#
# Dominant affine elements with a given minimality property correspond to
# coroot-lattice points of a simplex. Here we list those points for C2 and
# G2, rebuild the elements, and look at where their alcoves sit.

# In[1]:

import numpy as np

from rootposets import build_root_system
from rootposets.affine import (
    classify,
    elements_of_simplex,
    n_set,
    s_maximal_antichain,
)
from rootposets.arrangements import dominant_region_census, most_distant_alcove_check
from rootposets.simplices import lattice_points, simplex


# In[2]:

C2 = build_root_system("C2")
for name in ["D_min", "D_max", "D_s_min", "D_s_max"]:
    S = simplex(C2, name)
    pts = np.array(lattice_points(S))
    print(name, "vertices", [tuple(map(str, v)) for v in S.vertices()])
    print("   points", pts.tolist())


# Each point gives back an element; its reduced word, length and flags:

# In[3]:

for w in elements_of_simplex(C2, "D_s_min"):
    f = classify(w)
    print(w.reduced_word(), len(n_set(w)), f.as_dict())


# In G2 the s-maximal elements are indexed by strictly s-positive short
# antichains; their alcoves are the ones furthest out in their region.

# In[4]:

G2 = build_root_system("G2")
for w in elements_of_simplex(G2, "D_s_max"):
    ok, problems = most_distant_alcove_check(w)
    print(s_maximal_antichain(w), w.reduced_word(), "ok" if ok else problems)


# Region counts from the characteristic polynomial agree with the number
# of short antichains.

# In[5]:

for name in ["C2", "G2", "B3", "C3"]:
    c = dominant_region_census(build_root_system(name))
    print(name, c.enumerated, c.zaslavsky_dominant, c.enumerated_bounded, c.zaslavsky_bounded)
