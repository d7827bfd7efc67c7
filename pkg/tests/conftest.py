"""Shared fixtures: cached lattice families and independent oracles.

The oracles here deliberately avoid the library's own enumeration and
cover code paths: words come from subset-plus-interleaving generation and
order facts from one-step move closures.
"""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from bubblelattice.bubble import LatticeFamily, build_bubble_lattice, build_shuffle_poset
from bubblelattice.words import Letter, ShuffleWord

_BUBBLE_CACHE: dict[tuple[int, int], LatticeFamily] = {}
_SHUFFLE_CACHE: dict[tuple[int, int], LatticeFamily] = {}


@pytest.fixture(scope="session")
def bubble():
    def get(m: int, n: int) -> LatticeFamily:
        if (m, n) not in _BUBBLE_CACHE:
            _BUBBLE_CACHE[(m, n)] = build_bubble_lattice(m, n)
        return _BUBBLE_CACHE[(m, n)]

    return get


@pytest.fixture(scope="session")
def shuffle():
    def get(m: int, n: int) -> LatticeFamily:
        if (m, n) not in _SHUFFLE_CACHE:
            _SHUFFLE_CACHE[(m, n)] = build_shuffle_poset(m, n)
        return _SHUFFLE_CACHE[(m, n)]

    return get


def splits(total_max: int):
    """All (m, n) with m + n <= total_max."""
    return [
        (m, t - m)
        for t in range(total_max + 1)
        for m in range(t + 1)
    ]


def oracle_words(m: int, n: int) -> set[tuple[Letter, ...]]:
    """Every shuffle word, built by picking supports and interleaving them."""
    out: set[tuple[Letter, ...]] = set()
    for a in range(m + 1):
        for xsupp in combinations(range(1, m + 1), a):
            for b in range(n + 1):
                for ysupp in combinations(range(1, n + 1), b):
                    xs = [Letter.x(i) for i in xsupp]
                    ys = [Letter.y(j) for j in ysupp]
                    for positions in combinations(range(a + b), a):
                        seq: list[Letter] = []
                        xi = yi = 0
                        for k in range(a + b):
                            if k in positions:
                                seq.append(xs[xi])
                                xi += 1
                            else:
                                seq.append(ys[yi])
                                yi += 1
                        out.add(tuple(seq))
    return out


def one_step_moves(family: LatticeFamily) -> set[tuple[int, int]]:
    """All elementary upward moves: any-position indels and transpositions."""
    index = {w: i for i, w in enumerate(family.words)}
    moves: set[tuple[int, int]] = set()
    for i, w in enumerate(family.words):
        seq = w.letters
        for pos, letter in enumerate(seq):
            if letter.is_x:
                moves.add((i, index[ShuffleWord(seq[:pos] + seq[pos + 1:], w.m, w.n)]))
                if pos + 1 < len(seq) and not seq[pos + 1].is_x:
                    swapped = seq[:pos] + (seq[pos + 1], letter) + seq[pos + 2:]
                    moves.add((i, index[ShuffleWord(swapped, w.m, w.n)]))
        present = set(w.ysupport)
        for j in range(1, w.n + 1):
            if j in present:
                continue
            for pos in range(len(seq) + 1):
                candidate = seq[:pos] + (Letter.y(j),) + seq[pos:]
                try:
                    moves.add((i, index[ShuffleWord(candidate, w.m, w.n)]))
                except Exception:
                    continue
    return moves


def closure_matrix(family: LatticeFamily) -> list[int]:
    """Reflexive-transitive closure of the one-step moves, as bitmasks."""
    n = len(family.words)
    reach = [1 << i for i in range(n)]
    for a, b in one_step_moves(family):
        reach[a] |= 1 << b
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = reach[i]
            mask = reach[i]
            while mask:
                low = mask & -mask
                acc |= reach[low.bit_length() - 1]
                mask ^= low
            if acc != reach[i]:
                reach[i] = acc
                changed = True
    return reach


@st.composite
def random_word(draw, max_m: int = 4, max_n: int = 4):
    """A shuffle word drawn without using the library's enumerator."""
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    return draw(random_word_in(m, n))


@st.composite
def random_word_in(draw, m: int, n: int):
    xsupp = sorted(draw(st.sets(st.integers(1, m)))) if m else []
    ysupp = sorted(draw(st.sets(st.integers(1, n)))) if n else []
    xs = [Letter.x(i) for i in xsupp]
    ys = [Letter.y(j) for j in ysupp]
    pattern = draw(st.permutations([0] * len(xs) + [1] * len(ys)))
    seq = []
    xi = yi = 0
    for bit in pattern:
        if bit == 0:
            seq.append(xs[xi])
            xi += 1
        else:
            seq.append(ys[yi])
            yi += 1
    return ShuffleWord(tuple(seq), m, n)


@st.composite
def random_word_pair(draw, max_m: int = 4, max_n: int = 4):
    """Two words over the same alphabets."""
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    return draw(random_word_in(m, n)), draw(random_word_in(m, n))


@st.composite
def random_triple(draw, max_m: int = 3, max_n: int = 3):
    """Three words over the same alphabets."""
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    return tuple(draw(random_word_in(m, n)) for _ in range(3))
