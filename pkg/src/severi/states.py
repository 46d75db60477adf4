"""Symbolic descriptors of generalized Severi varieties.

A :class:`SeveriState` names the locus of reduced curves of class
d*f + N*e and geometric genus g on the product of a genus-one curve with
P^1, whose intersection with a distinguished fiber E0 consists of

* fixed points with prescribed contact orders (``alpha``, each entry
  carrying a point label), and
* groups of moving contact points (``betas``), each group constrained so
  that the sum of its points lies in a fixed line-bundle class on E0.

Line-bundle classes are formal sums of named symbols and labeled points;
only their degrees and formal expressions are tracked, never actual
arithmetic in the Picard group.  Genus may be negative: such states
parametrize curves that contain vertical fibers.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .profiles import Profile

PT = "pt"
SYM = "sym"


class InvalidState(ValueError):
    """A state violating one of its structural invariants."""


@dataclass(frozen=True)
class LineBundle:
    """A formal integer combination of named symbols and points.

    Terms are ``(kind, name, degree, coeff)`` with kind "pt" (a labeled
    point, degree 1) or "sym" (a named class of the given degree).  The
    degree of the bundle is the coefficient-weighted sum of term degrees.
    """

    terms: tuple[tuple[str, str, int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[tuple[str, str, int], int] = {}
        for kind, name, deg, coeff in self.terms:
            if kind not in (PT, SYM):
                raise ValueError(f"unknown term kind {kind!r}")
            if kind == PT and deg != 1:
                raise ValueError("points have degree 1")
            merged[(kind, name, deg)] = merged.get((kind, name, deg), 0) + coeff
        cleaned = tuple(
            (k, n, d, c) for (k, n, d), c in sorted(merged.items()) if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @property
    def degree(self) -> int:
        return sum(deg * coeff for _, _, deg, coeff in self.terms)

    def __add__(self, other: "LineBundle") -> "LineBundle":
        return LineBundle(self.terms + other.terms)

    def __sub__(self, other: "LineBundle") -> "LineBundle":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "LineBundle":
        return LineBundle(tuple((kk, n, d, k * c) for kk, n, d, c in self.terms))

    def point_names(self) -> tuple[str, ...]:
        return tuple(n for k, n, _, _ in self.terms if k == PT)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "expr": [
                {"kind": k, "name": n, "deg": d, "coeff": c} for k, n, d, c in self.terms
            ],
        }

    @staticmethod
    def from_json(data) -> "LineBundle":
        lb = LineBundle(
            tuple(
                (t["kind"], t["name"], int(t["deg"]), int(t["coeff"]))
                for t in data.get("expr", [])
            )
        )
        if "degree" in data and int(data["degree"]) != lb.degree:
            raise ValueError(
                f"stated degree {data['degree']} != expression degree {lb.degree}"
            )
        return lb


def symbol(name: str, degree: int) -> LineBundle:
    return LineBundle(((SYM, name, degree, 1),))


def point(name: str) -> LineBundle:
    return LineBundle(((PT, name, 1, 1),))


@dataclass(frozen=True)
class SeveriState:
    """The tuple (d, N, g, alpha with point labels, [(beta^j, L_j)])."""

    d: int
    N: int
    g: int
    alpha: tuple[tuple[int, str], ...] = ()
    betas: tuple[tuple[Profile, LineBundle], ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.alpha, key=lambda t: (-t[0], t[1])))
        object.__setattr__(self, "alpha", ordered)

    @property
    def ell(self) -> int:
        """Number of moving groups."""
        return len(self.betas)

    def alpha_profile(self) -> Profile:
        return Profile(tuple(order for order, _ in self.alpha))

    def point_labels(self) -> tuple[str, ...]:
        """Every point label in play: alpha labels and points named in bundles."""
        labels = [lbl for _, lbl in self.alpha]
        for _, bundle in self.betas:
            labels.extend(bundle.point_names())
        return tuple(dict.fromkeys(labels))


def violations(s: SeveriState) -> tuple[str, ...]:
    """All invariant violations, each named; empty means the state is valid."""
    out: list[str] = []
    if s.d < 1:
        out.append(f"fiber degree d={s.d} must be >= 1")
    for order, lbl in s.alpha:
        if order < 1:
            out.append(f"alpha order {order} at {lbl!r} must be >= 1")
    labels = [lbl for _, lbl in s.alpha]
    if len(set(labels)) != len(labels):
        out.append("alpha point labels must be distinct")
    total = sum(order for order, _ in s.alpha) + sum(
        beta.multiplicity for beta, _ in s.betas
    )
    if total != s.d:
        out.append(f"class equation fails: m(alpha) + sum m(beta^j) = {total} != d = {s.d}")
    for j, (beta, bundle) in enumerate(s.betas):
        if bundle.degree != beta.multiplicity:
            out.append(
                f"group {j}: deg L = {bundle.degree} != m(beta) = {beta.multiplicity}"
            )
        if beta.size == 0:
            out.append(f"group {j}: empty moving group")
    return tuple(out)


def is_valid(s: SeveriState) -> bool:
    return not violations(s)


def check_valid(s: SeveriState) -> None:
    bad = violations(s)
    if bad:
        raise InvalidState("; ".join(bad))


def dimension(s: SeveriState) -> int:
    """d + g + sum_j |beta^j| - 1 - ell."""
    check_valid(s)
    return s.d + s.g + sum(beta.size for beta, _ in s.betas) - 1 - s.ell


def is_normalized(s: SeveriState) -> bool:
    """True when no moving group is a singleton."""
    return all(beta.size >= 2 for beta, _ in s.betas)


def fresh_labels(s: SeveriState, count: int, stem: str = "q") -> tuple[str, ...]:
    used = set(s.point_labels())
    out: list[str] = []
    i = 1
    while len(out) < count:
        cand = f"{stem}{i}"
        if cand not in used:
            used.add(cand)
            out.append(cand)
        i += 1
    return tuple(out)


def normalize(s: SeveriState) -> tuple[SeveriState, int]:
    """Convert every singleton group (b) to a fixed point of order b.

    The point absorbing a singleton group is a b-th root of the group's
    class, of which there are b^2; the returned factor multiplies together
    one b^2 per conversion, and the emitted state stands for any one of the
    b^2 sibling varieties.
    """
    check_valid(s)
    singles = [(beta, bundle) for beta, bundle in s.betas if beta.size == 1]
    if not singles:
        return s, 1
    labels = fresh_labels(s, len(singles), stem="r")
    factor = 1
    alpha = list(s.alpha)
    for (beta, _), lbl in zip(singles, labels):
        b = beta.entries[0]
        alpha.append((b, lbl))
        factor *= b * b
    betas = tuple((beta, bundle) for beta, bundle in s.betas if beta.size >= 2)
    return SeveriState(d=s.d, N=s.N, g=s.g, alpha=tuple(alpha), betas=betas), factor


# -- canonical keys ----------------------------------------------------------

DEGREE = "degree"
SYMBOLIC = "symbolic"

_TIE_CAP = 720  # refuse to branch over more relabelings than this


def key_tuple(s: SeveriState, mode: str = DEGREE):
    """Hashable canonical key; invariant under group reordering and, in
    degree mode, under all point relabelings.

    In symbolic mode the key also separates states whose bundle expressions
    differ; point labels are canonicalized by minimizing over relabelings
    that respect the alpha ordering (ties capped at a small bound, beyond
    which the tie order falls back to the stored labels).
    """
    if mode == DEGREE:
        groups = tuple(
            sorted((beta.entries, bundle.degree) for beta, bundle in s.betas)
        )
        return (s.d, s.N, s.g, s.alpha_profile().entries, groups)
    if mode != SYMBOLIC:
        raise ValueError(f"unknown key mode {mode!r}")
    return (s.d, s.N, s.g) + _symbolic_part(s)


def canonical_key(s: SeveriState, mode: str = DEGREE) -> str:
    return json.dumps(key_tuple(s, mode), separators=(",", ":"))


def _symbolic_part(s: SeveriState):
    ordered = list(s.alpha)
    tie_groups: list[list[int]] = []
    i = 0
    while i < len(ordered):
        j = i
        while j < len(ordered) and ordered[j][0] == ordered[i][0]:
            j += 1
        tie_groups.append(list(range(i, j)))
        i = j
    n_perms = math.prod(math.factorial(len(t)) for t in tie_groups)
    if n_perms > _TIE_CAP:
        perms = [list(range(len(ordered)))]
    else:
        pools = [list(itertools.permutations(t)) for t in tie_groups]
        perms = [
            list(itertools.chain.from_iterable(combo))
            for combo in itertools.product(*pools)
        ]
    best = None
    for perm in perms:
        mapping = {ordered[pos][1]: f"P{rank + 1}" for rank, pos in enumerate(perm)}
        cand = _serialize_with(s, ordered, mapping)
        if best is None or cand < best:
            best = cand
    return best


def _serialize_with(s: SeveriState, ordered, mapping):
    alpha_part = tuple(
        (order, mapping[lbl]) for order, lbl in sorted(
            ordered, key=lambda t: (-t[0], mapping[t[1]])
        )
    )

    def group_form(beta: Profile, bundle: LineBundle, names):
        expr = tuple(
            (k, names.get(n, n) if k == PT else n, d, c) for k, n, d, c in bundle.terms
        )
        return (beta.entries, bundle.degree, tuple(sorted(expr)))

    rough = sorted(
        (group_form(beta, bundle, mapping), idx) for idx, (beta, bundle) in enumerate(s.betas)
    )
    names = dict(mapping)
    q = 1
    for _, idx in rough:
        for n in s.betas[idx][1].point_names():
            if n not in names:
                names[n] = f"Q{q}"
                q += 1
    groups = tuple(sorted(group_form(beta, bundle, names) for beta, bundle in s.betas))
    return (alpha_part, groups)


# -- JSON --------------------------------------------------------------------


def state_to_json(s: SeveriState) -> dict:
    return {
        "d": s.d,
        "N": s.N,
        "g": s.g,
        "alpha": [{"mult": order, "point": lbl} for order, lbl in s.alpha],
        "betas": [
            {"profile": beta.to_json(), "L": bundle.to_json()} for beta, bundle in s.betas
        ],
    }


def state_from_json(data) -> SeveriState:
    return SeveriState(
        d=int(data["d"]),
        N=int(data["N"]),
        g=int(data["g"]),
        alpha=tuple((int(a["mult"]), str(a["point"])) for a in data.get("alpha", ())),
        betas=tuple(
            (Profile.from_json(b["profile"]), LineBundle.from_json(b["L"]))
            for b in data.get("betas", ())
        ),
    )
