"""Permutation models of simply branched covers of a genus-one curve.

A cover of degree d with b branch points is encoded by a tuple
(A, B, T_1..T_b) of permutations of the sheets: A and B are the monodromies
of the two handle loops, the T_i are the branch monodromies, each a
transposition, subject to

    [A, B] = T_1 T_2 ... T_b      and      <A, B, T_*> transitive.

Composition convention, fixed once and used everywhere: ``compose(p, q)``
applies p first, then q; juxtaposition in a product reads left to right;
the commutator is [A, B] = A B A^-1 B^-1 in that reading.

The image of the cover's fundamental group inside Z^2 (the fundamental
group of the target) is computed by abelianizing Schreier generators of the
stabilizer of sheet 0, with A mapping to (1,0), B to (0,1) and every T to
(0,0).  The cover is primitive exactly when that lattice is all of Z^2,
and, for simply branched covers, exactly when the monodromy group is the
full symmetric group.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

from .lattices import IDENTITY, Lattice2, hnf


class BudgetExceeded(RuntimeError):
    pass


# -- permutations on {0..d-1}, word form -------------------------------------


def identity(d: int) -> tuple[int, ...]:
    return tuple(range(d))


def compose(p, q) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def then(*perms) -> tuple[int, ...]:
    acc = perms[0]
    for p in perms[1:]:
        acc = compose(acc, p)
    return acc


def inverse(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def transposition(d: int, i: int, j: int) -> tuple[int, ...]:
    if not (0 <= i < d and 0 <= j < d and i != j):
        raise ValueError("transposition needs two distinct sheets")
    out = list(range(d))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def is_transposition(p) -> bool:
    moved = [i for i, x in enumerate(p) if x != i]
    return len(moved) == 2 and p[moved[0]] == moved[1]


def commutator(a, b) -> tuple[int, ...]:
    return then(a, b, inverse(a), inverse(b))


def cycles_of(p) -> list[list[int]]:
    """Nontrivial cycles, 1-based, for the JSON form."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        out.append(cyc)
    return out


def perm_from_cycles(d: int, cycles) -> tuple[int, ...]:
    out = list(range(d))
    for cyc in cycles:
        cyc = [int(x) - 1 for x in cyc]
        if any(not 0 <= x < d for x in cyc) or len(set(cyc)) != len(cyc):
            raise ValueError(f"bad cycle {cyc} for degree {d}")
        for k in range(len(cyc)):
            out[cyc[k]] = cyc[(k + 1) % len(cyc)]
    return tuple(out)


# -- Hurwitz tuples -----------------------------------------------------------


@dataclass(frozen=True)
class HurwitzTuple:
    d: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    T: tuple[tuple[int, ...], ...] = ()

    @property
    def b(self) -> int:
        return len(self.T)

    def generators(self) -> tuple[tuple[int, ...], ...]:
        return (self.A, self.B) + self.T

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "A": cycles_of(self.A),
            "B": cycles_of(self.B),
            "T": [cycles_of(t) for t in self.T],
        }

    @staticmethod
    def from_json(data) -> "HurwitzTuple":
        d = int(data["d"])
        return HurwitzTuple(
            d=d,
            A=perm_from_cycles(d, data.get("A", [])),
            B=perm_from_cycles(d, data.get("B", [])),
            T=tuple(perm_from_cycles(d, c) for c in data.get("T", [])),
        )


def violations(t: HurwitzTuple) -> tuple[str, ...]:
    out: list[str] = []
    for name, p in (("A", t.A), ("B", t.B)) + tuple(
        (f"T{i+1}", ti) for i, ti in enumerate(t.T)
    ):
        if len(p) != t.d or sorted(p) != list(range(t.d)):
            out.append(f"{name} is not a permutation of {t.d} sheets")
            return tuple(out)
    for i, ti in enumerate(t.T):
        if not is_transposition(ti):
            out.append(f"T{i+1} is not a transposition")
    prod = identity(t.d)
    for ti in t.T:
        prod = compose(prod, ti)
    if commutator(t.A, t.B) != prod:
        out.append("[A,B] != T1...Tb")
    if not _transitive(t):
        out.append("sheets are not transitively permuted")
    return tuple(out)


def is_valid(t: HurwitzTuple) -> bool:
    return not violations(t)


def check_valid(t: HurwitzTuple) -> None:
    bad = violations(t)
    if bad:
        raise ValueError("; ".join(bad))


def _transitive(t: HurwitzTuple) -> bool:
    parent = list(range(t.d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in t.generators():
        for i, x in enumerate(p):
            parent[find(i)] = find(x)
    return len({find(i) for i in range(t.d)}) == 1


# -- group closure ------------------------------------------------------------


def group_closure(gens, budget: int = 40_320) -> frozenset:
    """The subgroup generated, by breadth-first closure; guarded by d!."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise ValueError("generators must share a degree")
    if math.factorial(d) > budget:
        raise BudgetExceeded(f"group closure needs {math.factorial(d)} > budget {budget}")
    seen = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


# -- the invariant lattice ----------------------------------------------------


def _letters(t: HurwitzTuple):
    return [(t.A, (1, 0)), (t.B, (0, 1))] + [(ti, (0, 0)) for ti in t.T]


def schreier_vectors(t: HurwitzTuple, base: int = 0):
    """Spanning-tree words w(s) in Z^2 and the abelianized Schreier
    generators of the stabilizer of ``base`` under the sheet action."""
    letters = _letters(t)
    w: list[tuple[int, int] | None] = [None] * t.d
    w[base] = (0, 0)
    order = [base]
    queue = [base]
    while queue:
        s = queue.pop(0)
        for p, vec in letters:
            s2 = p[s]
            if w[s2] is None:
                w[s2] = (w[s][0] + vec[0], w[s][1] + vec[1])
                order.append(s2)
                queue.append(s2)
    vectors = []
    for s in order:
        for p, vec in letters:
            s2 = p[s]
            vx = w[s][0] + vec[0] - w[s2][0]
            vy = w[s][1] + vec[1] - w[s2][1]
            if (vx, vy) != (0, 0):
                vectors.append((vx, vy))
    return w, vectors


def invariant_lattice(t: HurwitzTuple) -> Lattice2:
    """Image of the cover's fundamental group in Z^2, in Hermite form."""
    check_valid(t)
    _, vectors = schreier_vectors(t)
    if not vectors:
        return IDENTITY if t.d == 1 else hnf(vectors)
    return hnf(vectors)


def is_primitive(t: HurwitzTuple) -> bool:
    return invariant_lattice(t) == IDENTITY


def is_full_monodromy(t: HurwitzTuple, budget: int = 40_320) -> bool:
    check_valid(t)
    return len(group_closure(t.generators(), budget)) == math.factorial(t.d)


# -- canonical factorization --------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    lattice: Lattice2
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    a_bar: tuple[int, ...]
    b_bar: tuple[int, ...]

    @property
    def e(self) -> int:
        """Degree of the intermediate unramified cover."""
        return len(self.blocks)

    @property
    def dtilde(self) -> int:
        """Degree of the primitive part."""
        return len(self.block_of) // len(self.blocks)

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice.to_json(),
            "blocks": [list(b) for b in self.blocks],
            "e": self.e,
            "dtilde": self.dtilde,
            "quotient_A": cycles_of(self.a_bar),
            "quotient_B": cycles_of(self.b_bar),
        }


def factorize(t: HurwitzTuple) -> Factorization:
    """Factor the cover through the maximal intermediate unramified cover.

    Sheets fall into blocks indexed by Z^2 modulo the invariant lattice;
    A and B act on blocks as translations by (1,0) and (0,1), the branch
    letters act trivially."""
    check_valid(t)
    w, vectors = schreier_vectors(t)
    lat = hnf(vectors) if vectors else IDENTITY
    residues = lat.residues()
    res_index = {r: i for i, r in enumerate(residues)}
    block_of = tuple(res_index[lat.reduce(ws)] for ws in w)
    blocks = tuple(
        tuple(s for s in range(t.d) if block_of[s] == i) for i in range(len(residues))
    )
    if any(len(b) * len(blocks) != t.d for b in blocks):
        raise AssertionError("blocks of unequal size; lattice index must divide d")
    a_bar = tuple(res_index[lat.reduce((r[0] + 1, r[1]))] for r in residues)
    b_bar = tuple(res_index[lat.reduce((r[0], r[1] + 1))] for r in residues)
    for ti in t.T:
        for s in range(t.d):
            if block_of[ti[s]] != block_of[s]:
                raise AssertionError("branch letters must preserve blocks")
    for s in range(t.d):
        if block_of[t.A[s]] != a_bar[block_of[s]] or block_of[t.B[s]] != b_bar[block_of[s]]:
            raise AssertionError("handle letters must act on blocks as translations")
    return Factorization(
        lattice=lat, block_of=block_of, blocks=blocks, a_bar=a_bar, b_bar=b_bar
    )


@dataclass(frozen=True)
class KernelReport:
    applicable: bool
    e: int = 0
    dtilde: int = 0
    quotient_order: int = 0
    expected: int = 0
    actual: int = 0
    ok: bool = False

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "e": self.e,
            "dtilde": self.dtilde,
            "quotient_order": self.quotient_order,
            "expected": self.expected,
            "actual": self.actual,
            "ok": self.ok,
        }


def kernel_order_check(t: HurwitzTuple, budget: int = 40_320) -> KernelReport:
    """Verify |G| = (dtilde!)^e * |Gbar| for the canonical factorization.

    Inapplicable for unramified tuples (no branch letters): the statement
    is about simply branched covers."""
    check_valid(t)
    if not t.T:
        return KernelReport(applicable=False)
    fac = factorize(t)
    quotient = group_closure([fac.a_bar, fac.b_bar], budget)
    expected = math.factorial(fac.dtilde) ** fac.e * len(quotient)
    if expected > budget:
        raise BudgetExceeded(f"expected order {expected} > budget {budget}")
    actual = len(group_closure(t.generators(), budget))
    return KernelReport(
        applicable=True,
        e=fac.e,
        dtilde=fac.dtilde,
        quotient_order=len(quotient),
        expected=expected,
        actual=actual,
        ok=expected == actual,
    )


def transitive_on_block_pairs(t: HurwitzTuple) -> bool:
    """Orbit check behind irreducibility of fiber-product preimages.

    The monodromy group orbits on ordered pairs of distinct sheets must
    biject with the translation orbits on ordered pairs of blocks, i.e. two
    sheet pairs lie in one orbit exactly when their block pairs differ by a
    common translation."""
    check_valid(t)
    fac = factorize(t)
    d = t.d
    pairs = [(x, y) for x in range(d) for y in range(d) if x != y]
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in t.generators():
        for p in pairs:
            a = find(index[p])
            b = find(index[(g[p[0]], g[p[1]])])
            if a != b:
                parent[a] = b
    lat = fac.lattice
    w, _ = schreier_vectors(t)

    def diff_class(p):
        ux, uy = w[p[0]]
        vx, vy = w[p[1]]
        return lat.reduce((vx - ux, vy - uy))

    orbit_of_class: dict = {}
    for p in pairs:
        cls = diff_class(p)
        rep = find(index[p])
        if cls in orbit_of_class and orbit_of_class[cls] != rep:
            return False
        orbit_of_class[cls] = rep
    # distinct classes must stay in distinct orbits (the moves never merge
    # them), so the correspondence is a bijection exactly when the map
    # class -> orbit is injective as well
    reps = list(orbit_of_class.values())
    return len(set(reps)) == len(reps)


# -- dense tables for small degrees ------------------------------------------


@functools.lru_cache(maxsize=None)
def perm_table(d: int):
    """Dense multiplication table for S_d, for the exhaustive scans."""
    if d > 6:
        raise BudgetExceeded("dense tables are limited to d <= 6")
    perms = list(itertools.permutations(range(d)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[compose(p, q)] for q in perms] for p in perms]
    inv = [index[inverse(p)] for p in perms]
    transpositions = [i for i, p in enumerate(perms) if is_transposition(p)]
    mindist = [d - len({_cyc(p, s) for s in range(d)}) for p in perms]
    return perms, index, mul, inv, transpositions, mindist


def _cyc(p, s):
    # representative (minimum element) of the cycle of s
    rep = s
    x = p[s]
    while x != s:
        rep = min(rep, x)
        x = p[x]
    return rep
