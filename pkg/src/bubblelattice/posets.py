"""Finite posets and lattice analytics on top of bitset reachability.

Elements are 0..n-1.  Reachability is cached as one big-int bitmask per
element, so order tests are single AND/shift operations; the triple-
quantified lattice checks (semidistributivity, distributivity, left
modularity) run over numpy join/meet tables instead.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    KappaMissing,
    NotALattice,
    NotJoinSemidistributive,
    SizeMismatch,
)

Edge = tuple[int, int]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite poset given by its cover (Hasse) relation.

    ``up[i]`` / ``down[i]`` are reflexive reachability bitmasks; the cover
    lists are kept sorted so exports and iteration are deterministic.
    Construction verifies acyclicity and that the supplied edges really are
    the transitive reduction of their closure.
    """

    def __init__(self, n: int, cover_pairs: Iterable[Edge]):
        if n < 0:
            raise ValueError("element count must be nonnegative")
        self.n = n
        up_adj: list[set[int]] = [set() for _ in range(n)]
        down_adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in cover_pairs:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad cover pair ({a}, {b})")
            up_adj[a].add(b)
            down_adj[b].add(a)
        self.up_adj = tuple(tuple(sorted(s)) for s in up_adj)
        self.down_adj = tuple(tuple(sorted(s)) for s in down_adj)

        # deterministic topological order (smallest id first among minimal)
        indeg = [len(down_adj[i]) for i in range(n)]
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        topo: list[int] = []
        while heap:
            i = heapq.heappop(heap)
            topo.append(i)
            for j in self.up_adj[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
        if len(topo) != n:
            raise ValueError("cover relation contains a cycle")
        self.topo = tuple(topo)

        up = [0] * n
        for i in reversed(topo):
            mask = 1 << i
            for j in self.up_adj[i]:
                mask |= up[j]
            up[i] = mask
        down = [0] * n
        for i in topo:
            mask = 1 << i
            for j in self.down_adj[i]:
                mask |= down[j]
            down[i] = mask
        self.up = tuple(up)
        self.down = tuple(down)

        for a in range(n):
            for b in self.up_adj[a]:
                between = (up[a] & down[b]) & ~((1 << a) | (1 << b))
                if between:
                    raise ValueError(f"edge ({a}, {b}) is not a cover")

        # longest-path ranks from below and above
        hfb = [0] * n
        for i in topo:
            if self.down_adj[i]:
                hfb[i] = 1 + max(hfb[j] for j in self.down_adj[i])
        dtt = [0] * n
        for i in reversed(topo):
            if self.up_adj[i]:
                dtt[i] = 1 + max(dtt[j] for j in self.up_adj[i])
        self.height_below = tuple(hfb)
        self.depth_above = tuple(dtt)

    # -- basic queries ----------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def length(self) -> int:
        """Length of a longest chain (number of covers along it)."""
        return max(self.height_below, default=0)

    def minimal_elements(self) -> list[int]:
        return [i for i in range(self.n) if not self.down_adj[i]]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.n) if not self.up_adj[i]]

    def bottom(self) -> int:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NotALattice(f"no unique bottom: minimal elements {mins}")
        return mins[0]

    def top(self) -> int:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NotALattice(f"no unique top: maximal elements {maxs}")
        return maxs[0]

    def edges(self) -> list[Edge]:
        return [(a, b) for a in range(self.n) for b in self.up_adj[a]]

    def degree(self, i: int) -> int:
        return len(self.up_adj[i]) + len(self.down_adj[i])

    def interval_mask(self, p: int, q: int) -> int:
        return self.up[p] & self.down[q]

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.n, [(b, a) for (a, b) in self.edges()])

    def subposet(self, elements: Sequence[int]) -> "FinitePoset":
        """Induced subposet; element k of the result is elements[k]."""
        index = {e: k for k, e in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate elements")
        masks = []
        for e in elements:
            mask = 0
            for f in elements:
                if self.leq(e, f):
                    mask |= 1 << index[f]
            masks.append(mask)
        return FinitePoset.from_leq_masks(len(elements), masks)

    @property
    def leq_matrix(self) -> np.ndarray:
        cached = self.__dict__.get("_leq_matrix")
        if cached is None:
            n = self.n
            cached = np.zeros((n, n), dtype=bool)
            for i in range(n):
                for j in _bits(self.up[i]):
                    cached[i, j] = True
            cached.flags.writeable = False
            self.__dict__["_leq_matrix"] = cached
        return cached

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_leq_masks(cls, n: int, up_masks: Sequence[int]) -> "FinitePoset":
        """Build from reflexive reachability bitmasks via transitive reduction."""
        down = [0] * n
        for i in range(n):
            if not (up_masks[i] >> i) & 1:
                raise ValueError("relation must be reflexive")
            for j in _bits(up_masks[i]):
                down[j] |= 1 << i
        covers = []
        for i in range(n):
            strict_up = up_masks[i] & ~(1 << i)
            for j in _bits(strict_up):
                if i != j and (up_masks[j] >> i) & 1:
                    raise ValueError("relation is not antisymmetric")
                between = strict_up & down[j] & ~(1 << j)
                if not between:
                    covers.append((i, j))
        return cls(n, covers)

    @classmethod
    def from_leq(cls, n: int, leq: Callable[[int, int], bool]) -> "FinitePoset":
        masks = []
        for i in range(n):
            mask = 0
            for j in range(n):
                if leq(i, j):
                    mask |= 1 << j
            masks.append(mask)
        return cls.from_leq_masks(n, masks)

    # -- exports -----------------------------------------------------------

    def to_dot(
        self,
        labels: Optional[Sequence[str]] = None,
        edge_label: Optional[Callable[[int, int], str]] = None,
        name: str = "poset",
    ) -> str:
        """Graphviz DOT text; edges are directed upward (rankdir=BT)."""
        if labels is None:
            labels = [str(i) for i in range(self.n)]
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i in range(self.n):
            lines.append(f'  n{i} [label="{labels[i]}"];')
        for a, b in self.edges():
            if edge_label is None:
                lines.append(f"  n{a} -> n{b};")
            else:
                lines.append(f'  n{a} -> n{b} [label="{edge_label(a, b)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def covers_json(self) -> str:
        return json.dumps({"n": self.n, "covers": sorted(self.edges())})


# -- lattice tables ---------------------------------------------------------


def _tables(P: FinitePoset) -> tuple[np.ndarray, np.ndarray]:
    cached = P.__dict__.get("_lattice_tables")
    if cached is not None:
        return cached
    n = P.n
    pos = {e: k for k, e in enumerate(P.topo)}
    rpos = {e: n - 1 - pos[e] for e in range(n)}
    # masks over topo positions: the least set bit of an up-set intersection
    # is a minimal element of it, because topo position is a linear extension
    uptopo = [0] * n
    downtopo = [0] * n
    for i in range(n):
        for j in _bits(P.up[i]):
            uptopo[i] |= 1 << pos[j]
        for j in _bits(P.down[i]):
            downtopo[i] |= 1 << rpos[j]
    join = np.zeros((n, n), dtype=np.int32)
    meet = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i, n):
            common = uptopo[i] & uptopo[j]
            if not common:
                raise NotALattice(f"elements {i} and {j} have no upper bound")
            w = P.topo[(common & -common).bit_length() - 1]
            if common & ~uptopo[w]:
                raise NotALattice(f"elements {i} and {j} have two minimal upper bounds")
            join[i, j] = join[j, i] = w
            common = downtopo[i] & downtopo[j]
            if not common:
                raise NotALattice(f"elements {i} and {j} have no lower bound")
            w = P.topo[n - 1 - ((common & -common).bit_length() - 1)]
            if common & ~downtopo[w]:
                raise NotALattice(f"elements {i} and {j} have two maximal lower bounds")
            meet[i, j] = meet[j, i] = w
    join.flags.writeable = False
    meet.flags.writeable = False
    P.__dict__["_lattice_tables"] = (join, meet)
    return join, meet


def lattice_tables(P: FinitePoset) -> tuple[np.ndarray, np.ndarray]:
    """Join and meet tables; raises NotALattice when some pair has none."""
    return _tables(P)


def is_lattice(P: FinitePoset) -> bool:
    try:
        _tables(P)
        return True
    except NotALattice:
        return False


def join_of(P: FinitePoset, a: int, b: int) -> Optional[int]:
    """Least upper bound, or None if it does not exist (works on any poset)."""
    common = P.up[a] & P.up[b]
    if not common:
        return None
    best = None
    for w in _bits(common):
        if common & ~P.up[w] == 0:
            best = w
            break
    return best


def meet_of(P: FinitePoset, a: int, b: int) -> Optional[int]:
    common = P.down[a] & P.down[b]
    if not common:
        return None
    for w in _bits(common):
        if common & ~P.down[w] == 0:
            return w
    return None


# -- irreducibles and semidistributivity -------------------------------------


def atoms(P: FinitePoset) -> list[int]:
    return list(P.up_adj[P.bottom()])


def join_irreducibles(P: FinitePoset) -> list[int]:
    """Elements with exactly one lower cover (the bottom has none)."""
    return [i for i in range(P.n) if len(P.down_adj[i]) == 1]


def meet_irreducibles(P: FinitePoset) -> list[int]:
    return [i for i in range(P.n) if len(P.up_adj[i]) == 1]


def is_join_semidistributive(P: FinitePoset) -> bool:
    join, meet = _tables(P)
    for p in range(P.n):
        row = join[p]
        lhs = row[:, None] == row[None, :]
        rhs = row[meet] == row[:, None]
        if np.any(lhs & ~rhs):
            return False
    return True


def is_meet_semidistributive(P: FinitePoset) -> bool:
    join, meet = _tables(P)
    for p in range(P.n):
        row = meet[p]
        lhs = row[:, None] == row[None, :]
        rhs = row[join] == row[:, None]
        if np.any(lhs & ~rhs):
            return False
    return True


def is_semidistributive(P: FinitePoset) -> bool:
    return is_join_semidistributive(P) and is_meet_semidistributive(P)


def is_distributive(P: FinitePoset) -> bool:
    join, meet = _tables(P)
    for x in range(P.n):
        left = meet[x][join]                      # x ∧ (q ∨ r)
        right = join[np.ix_(meet[x], meet[x])]    # (x ∧ q) ∨ (x ∧ r)
        if np.any(left != right):
            return False
    return True


def lambda_jsd(P: FinitePoset, edge: Edge) -> int:
    """Meet of everything whose join with the lower end gives the upper end.

    The result is required to be join-irreducible; a failure of that
    requirement signals a lattice that is not join-semidistributive.
    """
    p, q = edge
    if q not in P.up_adj[p]:
        raise ValueError(f"({p}, {q}) is not a cover")
    join, meet = _tables(P)
    candidates = np.nonzero(join[p] == q)[0]
    label = reduce(lambda a, b: int(meet[a, b]), candidates[1:], int(candidates[0]))
    if len(P.down_adj[label]) != 1:
        raise NotJoinSemidistributive(
            f"edge ({p}, {q}) has non-irreducible label {label}"
        )
    return label


def canonical_join_rep(P: FinitePoset, p: int) -> frozenset[int]:
    """Canonical joinands of p: the labels on the edges entering p."""
    return frozenset(lambda_jsd(P, (p2, p)) for p2 in P.down_adj[p])


def is_perspective(P: FinitePoset, e1: Edge, e2: Edge) -> bool:
    p, q = e1
    p2, q2 = e2

    def half(a, b, c, d) -> bool:
        return join_of(P, b, c) == d and meet_of(P, b, c) == a

    return half(p, q, p2, q2) or half(p2, q2, p, q)


# -- extremality and trimness -------------------------------------------------


def is_extremal(P: FinitePoset) -> bool:
    k = P.length()
    nj = len(join_irreducibles(P))
    nm = len(meet_irreducibles(P))
    if k > min(nj, nm):
        raise RuntimeError("length exceeded the irreducible counts; corrupt poset")
    return k == nj == nm


def is_left_modular_element(P: FinitePoset, p: int) -> bool:
    join, meet = _tables(P)
    lt = P.leq_matrix & ~np.eye(P.n, dtype=bool)
    lhs = meet[join[:, p]]                               # (r ∨ p) ∧ q
    rhs = join[np.arange(P.n)[:, None], meet[p][None, :]]  # r ∨ (p ∧ q)
    return bool(np.all((lhs == rhs) | ~lt))


def left_modular_chain(
    P: FinitePoset, seed_chains: Iterable[Sequence[int]] = ()
) -> Optional[list[int]]:
    """A maximum-length maximal chain of left-modular elements, if one exists.

    Candidate chains are exactly the chains of full length, so the search
    walks the sub-DAG of elements lying on some maximum chain, memoizing the
    per-element left-modularity test.  Seed chains are tried first.
    """
    k = P.length()
    lm_cache: dict[int, bool] = {}

    def lm(i: int) -> bool:
        if i not in lm_cache:
            lm_cache[i] = is_left_modular_element(P, i)
        return lm_cache[i]

    for chain in seed_chains:
        if len(chain) != k + 1:
            continue
        if all(b in P.up_adj[a] for a, b in zip(chain, chain[1:])) and all(
            lm(i) for i in chain
        ):
            return list(chain)

    on_max = [
        i for i in range(P.n) if P.height_below[i] + P.depth_above[i] == k
    ]
    on_max_set = set(on_max)
    starts = [i for i in on_max if P.height_below[i] == 0]

    def dfs(i: int, acc: list[int]) -> Optional[list[int]]:
        if not lm(i):
            return None
        acc.append(i)
        if P.height_below[i] == k:
            return acc
        for j in P.up_adj[i]:
            if j in on_max_set and P.height_below[j] == P.height_below[i] + 1:
                found = dfs(j, acc)
                if found is not None:
                    return found
        acc.pop()
        return None

    for s in starts:
        found = dfs(s, [])
        if found is not None:
            return found
    return None


def is_trim(P: FinitePoset, seed_chains: Iterable[Sequence[int]] = ()) -> bool:
    return is_extremal(P) and left_modular_chain(P, seed_chains) is not None


# -- doubling -----------------------------------------------------------------


def doubling(P: FinitePoset, subset: Iterable[int]) -> FinitePoset:
    """Double P by the given subset.

    The result is the induced subposet of P x 2 on the down-set of the
    subset at level 1 together with (complement of that down-set) union the
    subset at level 2.
    """
    sub = set(subset)
    below = 0
    for x in sub:
        below |= P.down[x]
    ground: list[tuple[int, int]] = []
    for i in range(P.n):
        if (below >> i) & 1:
            ground.append((i, 1))
    for i in range(P.n):
        if not (below >> i) & 1 or i in sub:
            ground.append((i, 2))

    def leq(a: int, b: int) -> bool:
        (pa, la), (pb, lb) = ground[a], ground[b]
        return la <= lb and P.leq(pa, pb)

    return FinitePoset.from_leq(len(ground), leq)


# -- crowns -------------------------------------------------------------------


@dataclass(frozen=True)
class CrownWitness:
    atoms: tuple[int, ...]
    kappas: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.atoms)


def kappa(P: FinitePoset, a: int) -> int:
    """Greatest element not above a; raises KappaMissing when there is none."""
    excluded = ((1 << P.n) - 1) & ~P.up[a]
    if not excluded:
        raise KappaMissing(f"everything lies above {a}")
    maximal = [p for p in _bits(excluded) if (P.up[p] & ~(1 << p)) & excluded == 0]
    if len(maximal) != 1 or excluded & ~P.down[maximal[0]]:
        raise KappaMissing(f"no greatest element avoids being above {a}")
    return maximal[0]


def find_crown(P: FinitePoset) -> CrownWitness:
    """Atoms together with their kappa elements.

    For a semidistributive lattice with k atoms this witnesses a k-crown:
    atom i sits below kappa(j) exactly when i differs from j.  With two or
    fewer atoms the relational pattern still holds but the 2k points need
    not be distinct.
    """
    ats = atoms(P)
    kappas = [kappa(P, a) for a in ats]
    if len(set(kappas)) != len(kappas):
        raise KappaMissing("kappa is not injective; lattice is not semidistributive")
    for i, a in enumerate(ats):
        for j, kb in enumerate(kappas):
            if P.leq(a, kb) != (i != j):
                raise KappaMissing(
                    f"crown pattern broken at atom {a} vs kappa {kb}"
                )
    return CrownWitness(tuple(ats), tuple(kappas))


# -- polygonal intervals ------------------------------------------------------


@dataclass(frozen=True)
class Polygon:
    bottom: int
    top: int
    chains: tuple[tuple[int, ...], tuple[int, ...]]

    def chain_edges(self) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
        c1, c2 = self.chains
        return tuple(zip(c1, c1[1:])), tuple(zip(c2, c2[1:]))


def polygonal_intervals(P: FinitePoset) -> list[Polygon]:
    """Intervals that are unions of two chains meeting only at the ends.

    The proper part of such an interval consists of two nonempty chains with
    no comparabilities across them; the minimal instance is the diamond.
    """
    out: list[Polygon] = []
    for p in range(P.n):
        strict_up = P.up[p] & ~(1 << p)
        for q in _bits(strict_up):
            inner = (P.up[p] & P.down[q]) & ~((1 << p) | (1 << q))
            if not inner:
                continue
            members = list(_bits(inner))
            if sum(1 for a in P.up_adj[p] if (inner >> a) & 1) != 2:
                continue
            # split the open interval into comparability components
            groups: list[list[int]] = []
            for e in members:
                linked = [
                    g
                    for g, grp in enumerate(groups)
                    if any(P.leq(e, f) or P.leq(f, e) for f in grp)
                ]
                merged = [e]
                for g in sorted(linked, reverse=True):
                    merged.extend(groups.pop(g))
                groups.append(merged)
            if len(groups) != 2:
                continue
            chains = []
            for grp in groups:
                if not all(P.leq(a, b) or P.leq(b, a) for a in grp for b in grp):
                    chains = None
                    break
                chains.append(sorted(grp, key=lambda e: bin(P.down[e] & inner).count("1")))
            if chains is None:
                continue
            chains.sort(key=lambda c: c[0])
            out.append(
                Polygon(
                    p,
                    q,
                    (
                        (p, *chains[0], q),
                        (p, *chains[1], q),
                    ),
                )
            )
    return out


# -- isomorphism --------------------------------------------------------------


def _refine_colors(P: FinitePoset) -> tuple[int, ...]:
    colors = [
        (P.height_below[i], P.depth_above[i], len(P.up_adj[i]), len(P.down_adj[i]))
        for i in range(P.n)
    ]
    ids = {c: k for k, c in enumerate(sorted(set(colors)))}
    cur = [ids[c] for c in colors]
    while True:
        sigs = [
            (
                cur[i],
                tuple(sorted(cur[j] for j in P.up_adj[i])),
                tuple(sorted(cur[j] for j in P.down_adj[i])),
            )
            for i in range(P.n)
        ]
        ids = {s: k for k, s in enumerate(sorted(set(sigs)))}
        nxt = [ids[s] for s in sigs]
        if nxt == cur:
            return tuple(cur)
        cur = nxt


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> Optional[list[int]]:
    """A cover-preserving bijection from P to Q, or None.

    Color refinement by rank and degree profiles prunes the backtracking;
    adequate at desk scale, not a general graph-isomorphism engine.
    """
    if P.n != Q.n:
        raise SizeMismatch(f"|P| = {P.n} but |Q| = {Q.n}")
    if len(P.edges()) != len(Q.edges()):
        return None
    cp = _refine_colors(P)
    cq = _refine_colors(Q)
    if sorted(cp) != sorted(cq):
        return None
    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(cq):
        by_color.setdefault(c, []).append(j)
    order = sorted(range(P.n), key=lambda i: (len(by_color[cp[i]]), cp[i], i))
    mapping = [-1] * P.n
    inverse = [-1] * Q.n

    def consistent(i: int, j: int) -> bool:
        for a in P.up_adj[i]:
            if mapping[a] != -1 and mapping[a] not in Q.up_adj[j]:
                return False
        for a in P.down_adj[i]:
            if mapping[a] != -1 and mapping[a] not in Q.down_adj[j]:
                return False
        for b in Q.up_adj[j]:
            if inverse[b] != -1 and inverse[b] not in P.up_adj[i]:
                return False
        for b in Q.down_adj[j]:
            if inverse[b] != -1 and inverse[b] not in P.down_adj[i]:
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == P.n:
            return True
        i = order[k]
        for j in by_color[cp[i]]:
            if inverse[j] != -1 or not consistent(i, j):
                continue
            mapping[i] = j
            inverse[j] = i
            if backtrack(k + 1):
                return True
            mapping[i] = -1
            inverse[j] = -1
        return False

    if backtrack(0):
        # a bijection sending covers to covers with equal edge counts is an
        # order isomorphism (the order is the closure of its covers)
        return mapping
    return None


def is_anti_isomorphic(P: FinitePoset, Q: FinitePoset) -> Optional[list[int]]:
    return is_isomorphic(P, Q.dual())


# -- misc ---------------------------------------------------------------------


def maximum_length_chain(P: FinitePoset) -> list[int]:
    """One chain of maximum length, chosen deterministically."""
    k = P.length()
    best = min(i for i in range(P.n) if P.height_below[i] + P.depth_above[i] == k and P.height_below[i] == 0)
    chain = [best]
    while P.depth_above[chain[-1]] > 0:
        nxt = min(
            j
            for j in P.up_adj[chain[-1]]
            if P.height_below[j] == P.height_below[chain[-1]] + 1
            and P.height_below[j] + P.depth_above[j] == k
        )
        chain.append(nxt)
    return chain
