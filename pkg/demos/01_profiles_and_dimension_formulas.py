"""Tangency profiles and the dimension formulas.

A profile is a multiset of contact orders with a fixed fiber E0 of the
surface E x P^1 (E a genus-one curve).  This script walks through profile
arithmetic and the numeric dimension formulas that everything else is
balanced against.
"""

from severi.profiles import Profile, complement, partitions, remove_one_entry, subprofiles
from severi import surfaces as sf

print("== profile arithmetic ==")
alpha = Profile.of(2, 1, 1)
print(f"alpha = {alpha.entries}: size {alpha.size}, multiplicity {alpha.multiplicity}")
print(f"alpha + (3) = {(alpha + Profile.of(3)).entries}")
print(f"sub-multisets of (2,1): {[s.entries for s in subprofiles(Profile.of(2, 1))]}")
print(f"remove one entry of {alpha.entries}: {[s.entries for s in remove_one_entry(alpha)]}")
print(f"complement of (1,1) in {alpha.entries}: {complement(alpha, Profile.of(1, 1)).entries}")
print(f"partitions of 4: {[p.entries for p in partitions(4)]}")

print()
print("== the intersection table on E x P^1 ==")
model = sf.elliptic_times_p1()
f, e = model.divisor(f=1), model.divisor(e=1)
print(f"f.f = {sf.intersect(f, f)}, e.e = {sf.intersect(e, e)}, f.e = {sf.intersect(f, e)}")
d, N = 3, 2
tau = model.divisor(f=d, e=N)
print(f"(df+Ne).e = {sf.intersect(tau, e)} for d={d}")

print()
print("== the deformation bound parameter gamma ==")
# cutting along the fiber E0 (class e) with no marked points
gamma = sf.gamma(model.divisor(e=1), tau, 0)
print(f"gamma for class {d}f+{N}e along E0: {gamma} (always equals d)")
for g in (2, 3):
    print(f"  genus {g}: curves with fixed fiber intersection move in <= {sf.dim_bound(g, gamma)} dims")

print()
print("== dimension formulas ==")
print(f"expected dimension of the genus-2 Severi variety in class 3f+Ne: "
      f"{sf.severi_expected_dim(3, 2, 2).expected}")
exc = sf.severi_expected_dim(0, 1, 1)
print(f"the single exception d=0, N=g=1: expected {exc.expected}, actual {exc.actual}")
print(f"with a fixed fiber class, a fixed and b moving contacts: dim = d+g-2+b; "
      f"(3,2,3) -> {sf.dim_V_ab(3, 2, 3)}")
print(f"branch points of a degree-3 genus-4 cover of a genus-one curve: "
      f"{sf.branch_count(3, 4, 1)}")
print(f"adjunction genus of class 2f+2e: {sf.adjunction_genus(2, 2)}")
print(f"fiber dimension of embedded curves over covers at d=3, g=2 (non-special range): "
      f"{sf.prim_fiber_dim(3, 2)}")
