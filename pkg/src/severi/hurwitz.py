"""Enumeration of cover monodromy tuples and their orbits under branch-point
moves.

For a genus-one target, a genus-g degree-d simply branched cover has
b = 2g - 2 branch points and is encoded by a tuple (A, B, T_1..T_b); see
:mod:`.monodromy`.  Moving the branch points around the target acts on
tuples; orbits of that action are the connected components of the space of
covers.  The move set used here:

* braid moves exchanging adjacent branch letters,
* global conjugation (sheet relabeling),
* two handle moves pushing the last branch point around the two handle
  loops of the target.

The handle-move formulas are data, not doctrine: each is admitted only
after a symbolic check that it preserves the surface relation and sends
the last branch letter to a conjugate of itself, and the shipped pair is
validated by the orbit-count calibration in the test suite.  Twists of the
target itself are deliberately absent; they would change the invariant
lattice, which every admitted move must preserve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import words as wd
from .lattices import IDENTITY, Lattice2, sublattices
from .monodromy import (
    BudgetExceeded,
    HurwitzTuple,
    compose,
    identity,
    inverse,
    invariant_lattice,
    perm_table,
    then,
    transposition,
)


def branch_points(g: int) -> int:
    if g < 2:
        raise ValueError("simply branched covers of a genus-one target need g >= 2")
    return 2 * g - 2


# -- enumeration ---------------------------------------------------------------


def iter_tuples(d: int, b: int):
    """All valid tuples of degree d with b branch letters, streamed.

    Depth-first over transposition factorizations of each commutator,
    pruned by the parity and transposition-distance of the remainder.
    """
    if d < 1 or b < 0:
        raise ValueError("need d >= 1, b >= 0")
    perms, index, mul, inv, transps, mindist = perm_table(d)
    id_i = index[identity(d)]
    for a_i in range(len(perms)):
        a_inv = inv[a_i]
        for b_i in range(len(perms)):
            target = mul[mul[mul[a_i][b_i]][a_inv]][inv[b_i]]
            stack: list[int] = []

            def dfs(prefix: int, depth: int):
                rest = mul[inv[prefix]][target]
                need = mindist[rest]
                left = b - depth
                if left < need or (left - need) % 2:
                    return
                if depth == b:
                    t = HurwitzTuple(
                        d,
                        perms[a_i],
                        perms[b_i],
                        tuple(perms[x] for x in stack),
                    )
                    if _transitive_ints(d, perms, [a_i, b_i] + stack):
                        yield t
                    return
                for tr in transps:
                    stack.append(tr)
                    yield from dfs(mul[prefix][tr], depth + 1)
                    stack.pop()

            yield from dfs(id_i, 0)


def _transitive_ints(d, perms, gen_ids) -> bool:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gi in gen_ids:
        p = perms[gi]
        for i in range(d):
            ri, rx = find(i), find(p[i])
            if ri != rx:
                parent[ri] = rx
    return len({find(i) for i in range(d)}) == 1


def enumerate_tuples(d: int, g: int, *, max_d: int = 5, max_b: int = 6) -> list[HurwitzTuple]:
    """All valid tuples for degree d, source genus g (so b = 2g - 2)."""
    b = branch_points(g)
    if d > max_d or b > max_b:
        raise BudgetExceeded(
            f"enumeration guard: d={d} > {max_d} or b={b} > {max_b}"
        )
    return list(iter_tuples(d, b))


# -- moves ----------------------------------------------------------------------


def braid_move(t: HurwitzTuple, i: int) -> HurwitzTuple:
    """Exchange branch points i, i+1: (T_i, T_i+1) -> (T_i T_i+1 T_i^-1, T_i)."""
    if not (0 <= i < t.b - 1):
        raise ValueError(f"braid index {i} out of range for b={t.b}")
    T = list(t.T)
    T[i], T[i + 1] = then(T[i], T[i + 1], inverse(T[i])), T[i]
    return HurwitzTuple(t.d, t.A, t.B, tuple(T))


def braid_move_inverse(t: HurwitzTuple, i: int) -> HurwitzTuple:
    if not (0 <= i < t.b - 1):
        raise ValueError(f"braid index {i} out of range for b={t.b}")
    T = list(t.T)
    T[i], T[i + 1] = T[i + 1], then(inverse(T[i + 1]), T[i], T[i + 1])
    return HurwitzTuple(t.d, t.A, t.B, tuple(T))


def conjugate_tuple(t: HurwitzTuple, g) -> HurwitzTuple:
    """Relabel sheets by g: every entry x becomes g^-1 x g."""
    gi = inverse(g)
    c = lambda p: then(gi, p, g)
    return HurwitzTuple(t.d, c(t.A), c(t.B), tuple(c(x) for x in t.T))


@dataclass(frozen=True)
class HandleMove:
    """A move given by word formulas in a (= A), b (= B) and t (= last T).

    All other branch letters are untouched.  Formulas are evaluated with
    the library's left-to-right composition.
    """

    name: str
    a_word: wd.Word
    b_word: wd.Word
    t_word: wd.Word

    def apply(self, t: HurwitzTuple) -> HurwitzTuple:
        if t.b < 1:
            raise ValueError("handle moves need at least one branch letter")
        values = {"a": t.A, "b": t.B, "t": t.T[-1]}
        ident = identity(t.d)
        return HurwitzTuple(
            t.d,
            wd.evaluate(self.a_word, values, compose, ident, inverse),
            wd.evaluate(self.b_word, values, compose, ident, inverse),
            t.T[:-1]
            + (wd.evaluate(self.t_word, values, compose, ident, inverse),),
        )


def admissible(mv: HandleMove) -> bool:
    """Symbolic admission check: the formulas must preserve the surface
    relation [a,b] = tau_1 ... tau_{b-1} t identically and send t to a
    conjugate of t."""
    forced = wd.mul(
        wd.w("t"),
        wd.inv(wd.commutator(wd.w("a"), wd.w("b"))),
        wd.commutator(mv.a_word, mv.b_word),
    )
    return forced == mv.t_word and wd.conjugate_of(mv.t_word, "t")


# The two point-pushing moves: push the last branch point around the two
# handle loops.  Derived by searching relator-preserving substitutions and
# pinned down by the lattice-preservation contract and the orbit-count
# calibration; see tests.
PUSH_A = HandleMove(
    name="push_a",
    a_word=wd.w(("b", -1), "t", "b", "a"),
    b_word=wd.w("b"),
    t_word=wd.w(
        "t", "b", "a", ("b", -1), ("a", -1), ("b", -1),
        "t",
        "b", "a", "b", ("a", -1), ("b", -1), ("t", -1),
    ),
)

PUSH_B = HandleMove(
    name="push_b",
    a_word=wd.w("a"),
    b_word=wd.w("t", "b"),
    t_word=wd.w(
        "t", "b", "a", ("b", -1),
        "t",
        "b", ("a", -1), ("b", -1), ("t", -1),
    ),
)


@dataclass(frozen=True)
class MoveSet:
    handles: tuple[HandleMove, ...] = (PUSH_A, PUSH_B)
    use_braids: bool = True
    use_conjugation: bool = True

    def __post_init__(self) -> None:
        for mv in self.handles:
            if not admissible(mv):
                raise ValueError(f"handle move {mv.name!r} fails the admission check")


def default_moves() -> MoveSet:
    return MoveSet()


# -- orbits ---------------------------------------------------------------------


@dataclass
class OrbitReport:
    d: int
    b: int
    tuples: tuple[HurwitzTuple, ...]
    orbit_of: tuple[int, ...]
    orbit_count: int
    lattice_of_orbit: dict = field(default_factory=dict)
    census: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        census = sorted(
            ((lat.to_json(), n) for lat, n in self.census.items()),
            key=lambda x: x[0],
        )
        orbits = sorted(
            ((lat.to_json(), n) for (lat, n) in self.lattice_of_orbit.items()),
            key=lambda x: x[0],
        )
        return {
            "d": self.d,
            "b": self.b,
            "tuple_count": len(self.tuples),
            "orbit_count": self.orbit_count,
            "census": [{"lattice": l, "tuples": n} for l, n in census],
            "orbits_per_lattice": [{"lattice": l, "orbits": n} for l, n in orbits],
        }


def orbits(tuples, moves: MoveSet | None = None) -> OrbitReport:
    """Union-find closure of the move action; reports the orbit count and,
    per orbit, the common invariant lattice."""
    moves = moves or default_moves()
    tuples = list(tuples)
    if not tuples:
        raise ValueError("no tuples to partition")
    d = tuples[0].d
    index = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, t2):
        if t2 not in index:
            raise AssertionError("a move left the enumerated tuple set")
        y = index[t2]
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    conj_gens = [transposition(d, i, i + 1) for i in range(d - 1)] if d >= 2 else []
    for t, i in index.items():
        if moves.use_braids:
            for k in range(t.b - 1):
                union(i, braid_move(t, k))
        if moves.use_conjugation:
            for g in conj_gens:
                union(i, conjugate_tuple(t, g))
        if t.b >= 1:
            for mv in moves.handles:
                union(i, mv.apply(t))

    lattices = [invariant_lattice(t) for t in tuples]
    orbit_of = tuple(find(i) for i in range(len(tuples)))
    reps = sorted(set(orbit_of))
    census: dict = {}
    for lat in lattices:
        census[lat] = census.get(lat, 0) + 1
    lattice_of_orbit: dict = {}
    per_orbit_lat: dict = {}
    for i, rep in enumerate(orbit_of):
        if rep in per_orbit_lat and per_orbit_lat[rep] != lattices[i]:
            raise AssertionError("an orbit mixes two invariant lattices")
        per_orbit_lat[rep] = lattices[i]
    for rep in reps:
        lat = per_orbit_lat[rep]
        lattice_of_orbit[lat] = lattice_of_orbit.get(lat, 0) + 1
    return OrbitReport(
        d=d,
        b=tuples[0].b,
        tuples=tuple(tuples),
        orbit_of=orbit_of,
        orbit_count=len(reps),
        lattice_of_orbit=lattice_of_orbit,
        census=census,
    )


def invariant_census(tuples) -> dict:
    out: dict = {}
    for t in tuples:
        lat = invariant_lattice(t)
        out[lat] = out.get(lat, 0) + 1
    return out


def expected_lattices(d: int) -> tuple[Lattice2, ...]:
    """Lattices realizable by simply branched tuples: index divides d but is
    not d (the primitive part must have degree at least two)."""
    out = []
    for e in range(1, d):
        if d % e == 0:
            out.extend(sublattices(e))
    return tuple(sorted(out))


def move_graph_dot(tuples, moves: MoveSet | None = None) -> str:
    """DOT rendering of the move graph on an enumerated tuple set."""
    moves = moves or default_moves()
    tuples = list(tuples)
    index = {t: i for i, t in enumerate(tuples)}

    def label(t):
        def c(p):
            from .monodromy import cycles_of

            cyc = cycles_of(p)
            return "".join("(" + " ".join(map(str, x)) + ")" for x in cyc) or "id"

        return f"A={c(t.A)} B={c(t.B)} T={'|'.join(c(x) for x in t.T)}"

    lines = ["graph moves {"]
    for t, i in index.items():
        lines.append(f'  n{i} [label="{label(t)}"];')
    seen = set()

    def edge(i, t2, name):
        j = index[t2]
        key = (min(i, j), max(i, j), name)
        if i != j and key not in seen:
            seen.add(key)
            lines.append(f'  n{key[0]} -- n{key[1]} [label="{name}"];')

    d = tuples[0].d
    conj_gens = [transposition(d, i, i + 1) for i in range(d - 1)] if d >= 2 else []
    for t, i in index.items():
        if moves.use_braids:
            for k in range(t.b - 1):
                edge(i, braid_move(t, k), f"s{k+1}")
        if moves.use_conjugation:
            for gnum, g in enumerate(conj_gens):
                edge(i, conjugate_tuple(t, g), f"c{gnum+1}")
        if t.b >= 1:
            for mv in moves.handles:
                edge(i, mv.apply(t), mv.name)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- exhaustive verification scans ----------------------------------------------


@dataclass
class ScanReport:
    d: int
    b: int
    tuples: int = 0
    primitive: int = 0
    full: int = 0
    equivalence_failures: int = 0
    kernel_checked: int = 0
    kernel_failures: int = 0
    blockpair_failures: int = 0
    census: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (
            self.equivalence_failures or self.kernel_failures or self.blockpair_failures
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "b": self.b,
            "tuples": self.tuples,
            "primitive": self.primitive,
            "full_monodromy": self.full,
            "equivalence_failures": self.equivalence_failures,
            "kernel_checked": self.kernel_checked,
            "kernel_failures": self.kernel_failures,
            "blockpair_failures": self.blockpair_failures,
            "census": [
                {"lattice": lat.to_json(), "tuples": n}
                for lat, n in sorted(self.census.items())
            ],
            "ok": self.ok,
        }


def scan_monodromy(d: int, b: int, *, max_d: int = 6) -> ScanReport:
    """Stream every valid (d, b) tuple and verify, for each one:

    * primitivity (full invariant lattice) iff full monodromy (|G| = d!),
    * |G| = (dtilde!)^e * |quotient| for the canonical factorization,
    * monodromy orbits on ordered pairs of distinct sheets biject with
      translation orbits on pairs of blocks.

    Counts failures instead of raising, so a red run is inspectable.
    """
    if d > max_d:
        raise BudgetExceeded(f"scan guard: d={d} > {max_d}")
    perms, index, mul, inv, transps, mindist = perm_table(d)
    id_i = index[identity(d)]
    dfact = math.factorial(d)
    half = dfact // 2
    closure_cache: dict = {}

    def closure_order(gen_ids) -> int:
        key = tuple(sorted(set(gen_ids)))
        hit = closure_cache.get(key)
        if hit is not None:
            return hit
        seen = {id_i}
        frontier = [id_i]
        order = dfact
        while frontier:
            nxt = []
            for p in frontier:
                row = mul[p]
                for g in key:
                    q = row[g]
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            if len(seen) > half:
                break  # a proper subgroup has order at most d!/2
            frontier = nxt
        else:
            order = len(seen)
        closure_cache[key] = order
        return order

    # When |G| = d! the group is literally all of S_d, whose transitivity on
    # ordered pairs of distinct sheets is checked here once; the per-tuple
    # pair check then only runs on tuples with smaller monodromy.
    sd_pair_transitive = d < 2 or _pair_orbit_count(d) == 1

    report = ScanReport(d=d, b=b)
    quotient_cache: dict = {}

    for t in iter_tuples(d, b):
        report.tuples += 1
        gen_ids = [index[t.A], index[t.B]] + [index[x] for x in t.T]

        w, lat = _schreier_lattice(t)
        report.census[lat] = report.census.get(lat, 0) + 1
        primitive = lat == IDENTITY
        order = closure_order(gen_ids)
        full = order == dfact
        if primitive:
            report.primitive += 1
        if full:
            report.full += 1
        if primitive != full:
            report.equivalence_failures += 1

        # kernel order under the canonical factorization
        e = lat.index
        dtilde = d // e if d % e == 0 else None
        if dtilde is None:
            report.kernel_failures += 1
        else:
            q_order = quotient_cache.get(lat)
            if q_order is None:
                q_order = _translation_order(lat)
                quotient_cache[lat] = q_order
            expected = math.factorial(dtilde) ** e * q_order
            report.kernel_checked += 1
            if expected != order:
                report.kernel_failures += 1

        if full and primitive:
            if not sd_pair_transitive:
                report.blockpair_failures += 1
        elif not _blockpairs_ok(t, lat, w):
            report.blockpair_failures += 1
    return report


def _pair_orbit_count(d: int) -> int:
    gens = [transposition(d, i, i + 1) for i in range(d - 1)]
    pairs = [(x, y) for x in range(d) for y in range(d) if x != y]
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        for p in pairs:
            a, bb = find(index[p]), find(index[(g[p[0]], g[p[1]])])
            if a != bb:
                parent[a] = bb
    return len({find(i) for i in range(len(pairs))})


def _schreier_lattice(t: HurwitzTuple):
    """Spanning-tree vectors and the invariant lattice, accumulated
    incrementally with an early exit once the lattice is full."""
    from math import gcd

    from .lattices import _ext_gcd

    letters = [(t.A, (1, 0)), (t.B, (0, 1))] + [(x, (0, 0)) for x in t.T]
    w = [None] * t.d
    w[0] = (0, 0)
    order = [0]
    head = 0
    while head < len(order):
        s = order[head]
        head += 1
        ws = w[s]
        for p, vec in letters:
            s2 = p[s]
            if w[s2] is None:
                w[s2] = (ws[0] + vec[0], ws[1] + vec[1])
                order.append(s2)
    g, uy, zc = 0, 0, 0
    for s in range(t.d):
        ws = w[s]
        for p, vec in letters:
            s2 = p[s]
            vx = ws[0] + vec[0] - w[s2][0]
            vy = ws[1] + vec[1] - w[s2][1]
            if vx == 0:
                if vy:
                    zc = gcd(zc, vy if vy > 0 else -vy)
            else:
                if g == 0:
                    g, uy = (vx, vy) if vx > 0 else (-vx, -vy)
                else:
                    gg, r, ss = _ext_gcd(g, vx)
                    det = g * vy - vx * uy
                    zc = gcd(zc, (det if det > 0 else -det) // gg)
                    uy = r * uy + ss * vy
                    g = gg
            if g == 1 and zc == 1:
                return w, IDENTITY
    if g == 0 or zc == 0:
        raise ValueError("tuple is not transitive; no finite-index lattice")
    return w, Lattice2(g, uy % zc, zc)


def _translation_order(lat: Lattice2) -> int:
    residues = lat.residues()
    res_index = {r: i for i, r in enumerate(residues)}
    a_bar = tuple(res_index[lat.reduce((r[0] + 1, r[1]))] for r in residues)
    b_bar = tuple(res_index[lat.reduce((r[0], r[1] + 1))] for r in residues)
    seen = {identity(len(residues))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in (a_bar, b_bar):
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def _blockpairs_ok(t: HurwitzTuple, lat: Lattice2, w) -> bool:
    d = t.d
    pairs = [(x, y) for x in range(d) for y in range(d) if x != y]
    if not pairs:
        return True
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
            bb = find(index[(g[p[0]], g[p[1]])])
            if a != bb:
                parent[a] = bb
    orbit_of_class: dict = {}
    for p in pairs:
        ux, uy = w[p[0]]
        vx, vy = w[p[1]]
        cls = lat.reduce((vx - ux, vy - uy))
        rep = find(index[p])
        prev = orbit_of_class.get(cls)
        if prev is None:
            orbit_of_class[cls] = rep
        elif prev != rep:
            return False
    reps = list(orbit_of_class.values())
    return len(set(reps)) == len(reps)
