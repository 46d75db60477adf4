"""Monodromy tuples, the invariant lattice, and branch-point move orbits.

A degree-d simply branched cover of a genus-one curve is a tuple
(A, B, T_1..T_b) with [A,B] = T_1...T_b, the T_i transpositions, acting
transitively.  The image of the cover's fundamental group in Z^2 is an
index-e sublattice; the cover factors through the corresponding degree-e
unramified cover, and it is primitive (e = 1) exactly when the monodromy
group is the whole symmetric group.
"""

from severi import hurwitz as hw
from severi import monodromy as mo

print("== a degree-3 tuple ==")
t = mo.HurwitzTuple(3, (1, 2, 0), (0, 1, 2), ((1, 0, 2), (1, 0, 2)))
print(f"valid: {mo.is_valid(t)}")
print(f"invariant lattice rows: {mo.invariant_lattice(t).rows()}")
print(f"primitive: {mo.is_primitive(t)}, full monodromy: {mo.is_full_monodromy(t)}")
print(f"monodromy order: {len(mo.group_closure(t.generators()))}")

print()
print("== an imprimitive degree-4 witness and its factorization ==")
witness = next(x for x in hw.iter_tuples(4, 2) if not mo.is_primitive(x))
fac = mo.factorize(witness)
print(f"lattice rows {fac.lattice.rows()}, blocks {fac.blocks}")
print(f"factors as degree-{fac.dtilde} over a degree-{fac.e} unramified cover")
kernel = mo.kernel_order_check(witness)
print(f"|G| = (dtilde!)^e * |quotient|: {kernel.actual} = "
      f"({fac.dtilde}!)^{fac.e} * {kernel.quotient_order} -> {kernel.ok}")
print(f"pair orbits match block translation orbits: {mo.transitive_on_block_pairs(witness)}")

print()
print("== orbits under branch-point moves ==")
for (d, g) in [(2, 2), (2, 3), (3, 2), (4, 2)]:
    tuples = hw.enumerate_tuples(d, g)
    report = hw.orbits(tuples)
    lattices = sorted((lat.rows(), n) for lat, n in report.census.items())
    print(f"(d={d}, g={g}): {len(tuples)} tuples, {report.orbit_count} orbit(s)")
    for rows, n in lattices:
        print(f"    lattice {rows}: {n} tuples")

print()
print("== exhaustive verification at desk scale ==")
rep = hw.scan_monodromy(4, 2)
print(f"scan(4,2): {rep.tuples} tuples, primitive iff full on all: "
      f"{rep.equivalence_failures == 0}; kernel orders exact: {rep.kernel_failures == 0}")
