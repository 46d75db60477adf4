"""Candidate components of a generic hyperplane section of a Severi state.

Cutting the locus named by a state with the hyperplane of curves through a
generic point of the distinguished fiber E0 produces components of exactly
two shapes:

* type I: one moving point of one group becomes fixed at the new point,
  whose class is subtracted from that group's bundle;
* type II: E0 splits off with some multiplicity m >= 1; per moving group at
  most one point escapes to the curve dominating E0, intact groups keep
  their class, the depleted groups merge with a new tangency profile tau
  recording how the residual curve meets the cover of E0, and the genus
  drops by |tau|.

Every emitted child has dimension exactly one less than its parent.  The
enumeration is a list of suspects: nothing here claims each term really
appears, and the multiplicities are deliberately opaque placeholders.

Two enumerators are provided.  ``successors_simple`` implements the
statement available for states with simple fixed points and a single
transverse moving group (it requires g >= 2 and excludes only tau = (1)),
while ``successors_general`` implements the general statement (any
normalized state, |tau| >= 2).  On common ground they agree except for the
size-one tau terms, which only the simple statement admits; the
discrepancy is deliberate and surfaced by tests, not resolved here.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .profiles import Profile, partitions
from .states import (
    DEGREE,
    InvalidState,
    LineBundle,
    SeveriState,
    check_valid,
    dimension,
    fresh_labels,
    is_normalized,
    key_tuple,
    canonical_key,
    normalize,
    point,
)

KIND_I = "I"
KIND_IIA = "IIa"
KIND_IIB = "IIb"
KIND_II = "II"


class BudgetExceeded(RuntimeError):
    """A resource guard tripped."""


@dataclass(frozen=True)
class Term:
    """One candidate component of the hyperplane section."""

    kind: str
    child: SeveriState
    m: int = 0
    tau: Profile = Profile()
    kept: tuple[int, ...] = ()
    dropped: tuple[tuple[int, int], ...] = ()
    coefficient: str = ""

    def to_json(self) -> dict:
        from .states import state_to_json

        return {
            "kind": self.kind,
            "m": self.m,
            "tau": self.tau.to_json(),
            "kept": list(self.kept),
            "dropped": [list(p) for p in self.dropped],
            "coefficient": self.coefficient,
            "child": state_to_json(self.child),
        }


def _coefficient_token(kind, m, tau, kept, dropped) -> str:
    bits = [f"kind={kind}", f"m={m}", f"tau={list(tau.entries)}"]
    if kept:
        bits.append(f"kept={list(kept)}")
    if dropped:
        bits.append(f"dropped={[list(p) for p in dropped]}")
    return "coeff(" + ",".join(bits) + ")"


def _term(kind, child, m=0, tau=Profile(), kept=(), dropped=()) -> Term:
    return Term(
        kind=kind,
        child=child,
        m=m,
        tau=tau,
        kept=tuple(kept),
        dropped=tuple(dropped),
        coefficient=_coefficient_token(kind, m, tau, kept, dropped),
    )


def _check_term(parent: SeveriState, term: Term) -> Term:
    check_valid(term.child)
    if dimension(term.child) != dimension(parent) - 1:
        raise AssertionError(
            f"dimension drop != 1 for term {term.coefficient}"
        )
    if term.kind != KIND_I and term.tau.entries == (1,):
        raise AssertionError("tau = (1) must never be emitted")
    return term


def _dedup(parent: SeveriState, terms, key_mode: str) -> tuple[Term, ...]:
    seen = {}
    for term in terms:
        key = (term.kind, term.m, term.tau.entries, key_tuple(term.child, key_mode))
        if key not in seen:
            seen[key] = _check_term(parent, term)
    return tuple(seen[k] for k in sorted(seen))


# -- the simple statement ----------------------------------------------------


def successors_simple(s: SeveriState, key_mode: str = DEGREE) -> tuple[Term, ...]:
    """Terms of the hyperplane section for a state with alpha = 1^a (labeled)
    and a single transverse group beta = 1^b.  Requires g >= 2."""
    check_valid(s)
    if s.ell != 1:
        raise InvalidState("simple enumerator needs exactly one moving group")
    beta, bundle = s.betas[0]
    if any(order != 1 for order, _ in s.alpha) or set(beta.entries) - {1}:
        raise InvalidState("simple enumerator needs transverse contact only")
    if s.g < 2:
        raise InvalidState(f"simple statement requires g >= 2, got g={s.g}")
    a, b = len(s.alpha), beta.size
    if b < 1:
        raise InvalidState("simple enumerator needs a moving point")
    labels = [lbl for _, lbl in s.alpha]
    out: list[Term] = []

    if b >= 2:
        (p_new,) = fresh_labels(s, 1, stem="p")
        child = SeveriState(
            d=s.d,
            N=s.N,
            g=s.g,
            alpha=s.alpha + ((1, p_new),),
            betas=((Profile.ones(b - 1), bundle - point(p_new)),),
        )
        out.append(_term(KIND_I, child, dropped=((0, 1),)))

    for m in range(1, s.N + 1):
        for abar in range(0, a + 1):
            kept_sets = list(_index_subsets(labels, abar))
            # one moving point escapes to the cover of E0
            mass = s.d - (b - 1) - abar
            if mass >= 2:
                for tau in partitions(mass):
                    for kept_labels in kept_sets:
                        dropped_pts = [l for l in labels if l not in kept_labels]
                        new_bundle = bundle
                        for l in dropped_pts:
                            new_bundle = new_bundle + point(l)
                        child = SeveriState(
                            d=s.d,
                            N=s.N - m,
                            g=s.g - tau.size,
                            alpha=tuple((1, l) for l in kept_labels),
                            betas=((Profile.ones(b - 1) + tau, new_bundle),),
                        )
                        out.append(_term(KIND_IIA, child, m=m, tau=tau, dropped=((0, 1),)))
            # the whole group survives on the residual curve
            mass = s.d - b - abar
            if mass >= 2:
                for tau in partitions(mass):
                    for kept_labels in kept_sets:
                        dropped_pts = [l for l in labels if l not in kept_labels]
                        lbar = LineBundle()
                        for l in dropped_pts:
                            lbar = lbar + point(l)
                        child = SeveriState(
                            d=s.d,
                            N=s.N - m,
                            g=s.g - tau.size,
                            alpha=tuple((1, l) for l in kept_labels),
                            betas=((Profile.ones(b), bundle), (tau, lbar)),
                        )
                        out.append(_term(KIND_IIB, child, m=m, tau=tau, kept=(0,)))
    return _dedup(s, out, key_mode)


def _index_subsets(labels, size):
    return itertools.combinations(labels, size)


# -- the general statement ---------------------------------------------------


def successors_general(s: SeveriState, key_mode: str = DEGREE) -> tuple[Term, ...]:
    """Terms of the hyperplane section for any valid normalized state."""
    check_valid(s)
    if not is_normalized(s):
        raise InvalidState("general enumerator needs every group size >= 2; normalize first")
    out: list[Term] = []

    # type I: one moving point of group j becomes fixed at a new point
    for j, (beta, bundle) in enumerate(s.betas):
        for n in sorted(set(beta.entries), reverse=True):
            (p_new,) = fresh_labels(s, 1, stem="p")
            rest = list(beta.entries)
            rest.remove(n)
            new_groups = list(s.betas)
            new_groups[j] = (Profile(tuple(rest)), bundle - n * point(p_new))
            child = SeveriState(
                d=s.d,
                N=s.N,
                g=s.g,
                alpha=s.alpha + ((n, p_new),),
                betas=tuple(new_groups),
            )
            out.append(_term(KIND_I, child, dropped=((j, n),)))

    # type II: E0 splits off with multiplicity m
    ell = s.ell
    for m in range(1, s.N + 1):
        for kept_mask in itertools.product((True, False), repeat=ell):
            kept = tuple(j for j in range(ell) if kept_mask[j])
            loose = [j for j in range(ell) if not kept_mask[j]]
            drop_choices = [sorted(set(s.betas[j][0].entries)) for j in loose]
            for drops in itertools.product(*drop_choices):
                dropped = tuple(zip(loose, drops))
                for alpha_kept in _alpha_subsets(s.alpha):
                    alpha_dropped = [ent for ent in s.alpha if ent not in alpha_kept]
                    mass = sum(o for o, _ in alpha_dropped) + sum(drops)
                    if mass < 2:
                        continue
                    merged_entries: list[int] = []
                    merged_bundle = LineBundle()
                    for j, n in dropped:
                        beta, bundle = s.betas[j]
                        rest = list(beta.entries)
                        rest.remove(n)
                        merged_entries.extend(rest)
                        merged_bundle = merged_bundle + bundle
                    for order, lbl in alpha_dropped:
                        merged_bundle = merged_bundle + order * point(lbl)
                    for tau in partitions(mass):
                        if tau.size < 2:
                            continue
                        new_groups = tuple(
                            (s.betas[j][0], s.betas[j][1]) for j in kept
                        ) + ((Profile(tuple(merged_entries)) + tau, merged_bundle),)
                        child = SeveriState(
                            d=s.d,
                            N=s.N - m,
                            g=s.g - tau.size,
                            alpha=tuple(alpha_kept),
                            betas=new_groups,
                        )
                        out.append(
                            _term(KIND_II, child, m=m, tau=tau, kept=kept, dropped=dropped)
                        )
    return _dedup(s, out, key_mode)


def _alpha_subsets(alpha):
    out = []
    for r in range(len(alpha) + 1):
        out.extend(itertools.combinations(alpha, r))
    return out


# -- iterated sections: the degeneration forest ------------------------------


@dataclass(frozen=True)
class ForestEdge:
    parent: str
    child: str
    term: Term
    factor: int


@dataclass
class Forest:
    nodes: dict = field(default_factory=dict)  # canonical key -> SeveriState
    edges: list = field(default_factory=list)
    roots: tuple = ()
    root_factors: dict = field(default_factory=dict)
    truncated: bool = False

    def to_json(self) -> dict:
        from .states import state_to_json

        return {
            "nodes": {k: state_to_json(v) for k, v in sorted(self.nodes.items())},
            "edges": [
                {
                    "parent": e.parent,
                    "child": e.child,
                    "factor": e.factor,
                    **e.term.to_json(),
                }
                for e in self.edges
            ],
            "roots": sorted(self.roots),
            "truncated": self.truncated,
        }


def build_forest(
    roots,
    floor: int = 0,
    max_depth: int | None = None,
    max_nodes: int = 10_000,
    key_mode: str = DEGREE,
) -> Forest:
    """Closure of the root states under the general enumerator.

    Children are normalized on insertion (the b^2 splitting factor lands on
    the edge) and deduplicated by canonical key, so the result is a DAG in
    which every edge drops dimension by exactly one.  Nodes of dimension at
    most ``floor`` are kept but not expanded.  If the node budget trips, the
    partial forest is returned with ``truncated`` set.
    """
    forest = Forest()
    queue: deque = deque()
    root_keys = []
    for root in roots:
        check_valid(root)
        nstate, factor = normalize(root)
        key = canonical_key(nstate, key_mode)
        root_keys.append(key)
        forest.root_factors[key] = factor
        if key not in forest.nodes:
            forest.nodes[key] = nstate
            queue.append((key, 0))
    forest.roots = tuple(dict.fromkeys(root_keys))

    while queue:
        key, depth = queue.popleft()
        state = forest.nodes[key]
        if dimension(state) <= floor:
            continue
        if max_depth is not None and depth >= max_depth:
            continue
        for term in successors_general(state, key_mode):
            nchild, factor = normalize(term.child)
            ckey = canonical_key(nchild, key_mode)
            if ckey not in forest.nodes:
                if len(forest.nodes) >= max_nodes:
                    forest.truncated = True
                    return forest
                forest.nodes[ckey] = nchild
                queue.append((ckey, depth + 1))
            forest.edges.append(ForestEdge(parent=key, child=ckey, term=term, factor=factor))
    return forest


@dataclass(frozen=True)
class StableMapShape:
    """Shape of the limit stable map attached to a type II term: the residual
    part (the child state) glued at |tau| nodes to an unramified cover of E0
    of total degree m, possibly disconnected."""

    child: SeveriState
    m: int
    tau: Profile
    nodes: int
    cover_degree_partitions: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        from .states import state_to_json

        return {
            "m": self.m,
            "tau": self.tau.to_json(),
            "nodes": self.nodes,
            "cover_degree_partitions": [list(p) for p in self.cover_degree_partitions],
            "residual": state_to_json(self.child),
        }


def limit_stable_map(term: Term) -> StableMapShape:
    """Describe the limit stable map of a type II term.

    Each component of the cover of E0 must absorb at least one of the |tau|
    nodes, so its component degrees form a partition of m into at most |tau|
    parts.  The partition list is advisory; the theorems do not constrain
    the pair (m, tau) further.
    """
    if term.kind == KIND_I:
        raise ValueError("type I terms do not split off the fiber")
    parts = tuple(
        p.entries for p in partitions(term.m) if p.size <= term.tau.size
    )
    return StableMapShape(
        child=term.child,
        m=term.m,
        tau=term.tau,
        nodes=term.tau.size,
        cover_degree_partitions=parts,
    )


def forest_to_dot(forest: Forest) -> str:
    """Deterministic DOT rendering; edges labeled kind/m/tau."""
    lines = ["digraph forest {"]
    keys = {k: f"n{i}" for i, k in enumerate(sorted(forest.nodes))}
    for k in sorted(forest.nodes):
        s = forest.nodes[k]
        beta_txt = ",".join(
            f"{list(beta.entries)}" for beta, _ in s.betas
        )
        label = (
            f"d={s.d} N={s.N} g={s.g}\\n"
            f"a={list(s.alpha_profile().entries)} b=[{beta_txt}]\\n"
            f"dim={dimension(s)}"
        )
        shape = ' shape=box style=bold' if k in forest.roots else " shape=box"
        lines.append(f'  {keys[k]} [label="{label}"{shape}];')
    for e in sorted(
        forest.edges, key=lambda e: (e.parent, e.child, e.term.kind, e.term.m, e.term.tau.entries)
    ):
        label = e.term.kind
        if e.term.kind != KIND_I:
            label += f" m={e.term.m} tau={list(e.term.tau.entries)}"
        if e.factor != 1:
            label += f" x{e.factor}"
        lines.append(f'  {keys[e.parent]} -> {keys[e.child]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
