"""Unramified covers of a genus-one curve as sublattices of Z^2.

Degree-n unramified covers correspond to index-n sublattices; Hermite
normal form makes the count sigma(n), Smith normal form classifies the
cokernel, and the constructive lemma produces a complementary cover with a
marked pair of points whenever the required index is coprime to the
m-invariant.
"""

from severi import lattices as lt

print("== Hermite and Smith forms ==")
lat = lt.hnf([(2, 4), (6, 2)])
print(f"lattice spanned by (2,4),(6,2): HNF rows {lat.rows()}, index {lat.index}")
print(f"Smith form {lt.snf(lat)}: cokernel C_{lt.snf(lat)[0]} + C_{lt.snf(lat)[1]}")
print(f"m-invariant {lt.m_invariant(lat)} (reduced means m = 1)")

print()
print("== counting covers ==")
for e in (1, 2, 3, 4, 6, 12):
    print(f"index {e}: {len(lt.sublattices(e))} sublattices (sigma({e}))")
print()
for d in (2, 4, 6, 12):
    print(f"degree {d} simply branched covers of a fixed target: "
          f"{lt.hurwitz_component_count(d)} components")
print()
print("with the target moving in moduli, components are pairs (dtilde, m), m^2 | dtilde | d:")
for d in (4, 12):
    pairs = lt.global_component_pairs(d)
    print(f"  d={d}: {list(pairs)} ({len(pairs)} pairs; "
          f"{len(lt.global_component_pairs(d, proper_only=True))} with dtilde proper)")

print()
print("== the constructive lemma ==")
ltilde = lt.Lattice2(1, 0, 2)
for D in (2, 3):
    result = lt.construct_hat(ltilde, D)
    lhat, v = result
    print(f"index-{D} complement of {ltilde.rows()}: rows {lhat.rows()}, witness vector {v}")
    print(f"  sum with the original is full: {lt.is_full(lt.lattice_sum(lhat, ltilde))}")

doubled = lt.Lattice2(2, 0, 2)  # m-invariant 2
print(f"for {doubled.rows()} (m = 2): D=2 -> {lt.construct_hat(doubled, 2)}, "
      f"D=3 -> feasible: {lt.construct_hat(doubled, 3) is not None}")
