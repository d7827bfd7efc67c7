"""The two orders on shuffle words and the resulting lattice families.

The shuffle order moves upward by inserting y-letters or deleting
x-letters; the bubble order additionally allows swapping an adjacent
``x y`` pair into ``y x``.  Covers in the bubble order are generated
constructively (per-letter right indels and transpositions) rather than by
transitive reduction; joins come from the y-filling formula and meets from
duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CapExceeded
from .posets import FinitePoset
from .words import (
    Letter,
    ShuffleWord,
    SupportProfile,
    count_shuffle,
    dualize,
    enumerate_shuffle,
    restriction,
    word_from_profile,
    y_fill,
)

DEFAULT_CAP = 50_000


def leq_shuffle(u: ShuffleWord, v: ShuffleWord) -> bool:
    """Shuffle order: x's may only disappear, y's only appear, rest agrees."""
    if not set(v.xsupport) <= set(u.xsupport):
        return False
    if not set(u.ysupport) <= set(v.ysupport):
        return False
    return restriction(u, v).letters == restriction(v, u).letters


def leq_bubble(u: ShuffleWord, v: ShuffleWord) -> bool:
    """Bubble order: like the shuffle order but inversions may also grow."""
    if not set(v.xsupport) <= set(u.xsupport):
        return False
    if not set(u.ysupport) <= set(v.ysupport):
        return False
    return restriction(u, v).inversions <= restriction(v, u).inversions


@dataclass(frozen=True)
class CoverStep:
    """How one word covers another: a transposition or a right indel.

    A transposition records exactly the inversion pair it creates.
    """

    kind: str  # "transposition" | "delete_x" | "insert_y"
    s: Optional[int] = None
    t: Optional[int] = None


def upper_covers(u: ShuffleWord) -> list[tuple[ShuffleWord, CoverStep]]:
    """All covers of u in the bubble order, built letter by letter.

    Each x-letter present yields one cover (delete it when followed by
    another x or final, else transpose it with the y right after it), and
    each y-letter absent yields one cover (insert it right before the next
    larger present y, else at the end).
    """
    out: list[tuple[ShuffleWord, CoverStep]] = []
    seq = u.letters
    for pos, letter in enumerate(seq):
        if not letter.is_x:
            continue
        if pos + 1 == len(seq) or seq[pos + 1].is_x:
            covered = seq[:pos] + seq[pos + 1:]
            out.append(
                (ShuffleWord(covered, u.m, u.n), CoverStep("delete_x", s=letter.index))
            )
        else:
            nxt = seq[pos + 1]
            covered = seq[:pos] + (nxt, letter) + seq[pos + 2:]
            out.append(
                (
                    ShuffleWord(covered, u.m, u.n),
                    CoverStep("transposition", s=letter.index, t=nxt.index),
                )
            )
    present = set(u.ysupport)
    for j in range(1, u.n + 1):
        if j in present:
            continue
        target = None
        for pos, letter in enumerate(seq):
            if not letter.is_x and letter.index > j:
                target = pos
                break
        if target is None:
            covered = seq + (Letter.y(j),)
        else:
            covered = seq[:target] + (Letter.y(j),) + seq[target:]
        out.append((ShuffleWord(covered, u.m, u.n), CoverStep("insert_y", t=j)))
    return out


def join(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Least upper bound in the bubble order, via the y-filling formula.

    The join keeps the common x's, all the y's, and the union of the
    inversions the two y-filled words induce on that support.
    """
    if (u.m, u.n) != (v.m, v.n):
        raise ValueError("join requires words from the same family")
    shared = set(v.xsupport)
    xsupp = tuple(s for s in u.xsupport if s in shared)
    ysupp = tuple(sorted(set(u.ysupport) | set(v.ysupport)))
    support_word = ShuffleWord(
        tuple(Letter.x(s) for s in xsupp) + tuple(Letter.y(t) for t in ysupp),
        u.m,
        u.n,
    )
    inv_u = restriction(y_fill(u), support_word).inversions
    inv_v = restriction(y_fill(v), support_word).inversions
    return word_from_profile(SupportProfile(xsupp, ysupp, inv_u | inv_v, u.m, u.n))


def meet(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Greatest lower bound, computed as the dual of a join."""
    return dualize(join(dualize(u), dualize(v)))


@dataclass(frozen=True)
class LatticeFamily:
    """A fully built order on all shuffle words of one alphabet pair."""

    m: int
    n: int
    words: tuple[ShuffleWord, ...]
    poset: FinitePoset

    def index(self, u: ShuffleWord) -> int:
        return self._index[u]

    @property
    def _index(self) -> dict[ShuffleWord, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {w: i for i, w in enumerate(self.words)}
            self.__dict__["_index_cache"] = cached
        return cached

    def labels(self) -> list[str]:
        return [str(w) for w in self.words]

    def bottom_word(self) -> ShuffleWord:
        return self.words[self.poset.bottom()]

    def top_word(self) -> ShuffleWord:
        return self.words[self.poset.top()]


def _check_cap(m: int, n: int, cap: Optional[int]) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    size = count_shuffle(m, n)
    if size > limit:
        raise CapExceeded(
            f"family ({m},{n}) has {size} elements, above the cap {limit}"
        )


def build_bubble_lattice(m: int, n: int, cap: Optional[int] = None) -> LatticeFamily:
    """Hasse diagram of the bubble order, from the constructive cover rules."""
    _check_cap(m, n, cap)
    words = enumerate_shuffle(m, n)
    index = {w: i for i, w in enumerate(words)}
    pairs = []
    for i, w in enumerate(words):
        for cov, _step in upper_covers(w):
            pairs.append((i, index[cov]))
    return LatticeFamily(m, n, words, FinitePoset(len(words), pairs))


def build_shuffle_poset(m: int, n: int, cap: Optional[int] = None) -> LatticeFamily:
    """Hasse diagram of the shuffle order, by transitive reduction."""
    _check_cap(m, n, cap)
    words = enumerate_shuffle(m, n)
    poset = FinitePoset.from_leq(
        len(words), lambda i, j: leq_shuffle(words[i], words[j])
    )
    return LatticeFamily(m, n, words, poset)


def same_support_interval(
    xsupp: tuple[int, ...], ysupp: tuple[int, ...], m: int, n: int
) -> tuple[tuple[ShuffleWord, ...], FinitePoset]:
    """Words with exactly these supports, ordered by inversion inclusion."""
    xs = tuple(Letter.x(s) for s in xsupp)
    ys = tuple(Letter.y(t) for t in ysupp)
    found: list[ShuffleWord] = []

    def interleave(prefix: tuple[Letter, ...], i: int, j: int) -> None:
        if i == len(xs) and j == len(ys):
            found.append(ShuffleWord(prefix, m, n))
            return
        if i < len(xs):
            interleave(prefix + (xs[i],), i + 1, j)
        if j < len(ys):
            interleave(prefix + (ys[j],), i, j + 1)

    interleave((), 0, 0)
    found.sort(key=lambda w: w.sort_key)
    poset = FinitePoset.from_leq(
        len(found), lambda i, j: found[i].inversions <= found[j].inversions
    )
    return tuple(found), poset


def extremal_chain_words(m: int, n: int) -> list[ShuffleWord]:
    """A maximum-length chain: append all y's, sweep each y left, delete x's.

    Appending y_1..y_n, transposing each y_j across all of the x's, and then
    deleting x_m..x_1 gives mn+m+n covers in a row.
    """
    seq: list[Letter] = [Letter.x(i) for i in range(1, m + 1)]
    chain = [ShuffleWord(tuple(seq), m, n)]
    for j in range(1, n + 1):
        seq.append(Letter.y(j))
        chain.append(ShuffleWord(tuple(seq), m, n))
    for j in range(1, n + 1):
        pos = seq.index(Letter.y(j))
        for _ in range(m):
            seq[pos - 1], seq[pos] = seq[pos], seq[pos - 1]
            pos -= 1
            chain.append(ShuffleWord(tuple(seq), m, n))
    for _ in range(m):
        seq.pop()
        chain.append(ShuffleWord(tuple(seq), m, n))
    return chain
