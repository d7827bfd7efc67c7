"""Shuffle words over two increasing alphabets.

Letters come from two disjoint alphabets x_1..x_m and y_1..y_n.  A shuffle
word is a duplicate-free sequence whose x-letters appear with strictly
increasing indices and whose y-letters do too.  Besides construction and
enumeration, this module provides restriction, inversion sets, the
right-filling operators, dualization, and reconstruction of a word from its
support profile (supports plus inversion set), which pins a word down
uniquely.

The text encoding used throughout the repo is dotted tokens such as
``x1.y1.x2``; the empty word is written ``-``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DuplicateLetter,
    NotIncreasing,
    OutOfAlphabet,
    Unrealizable,
    WordError,
)

X_TAG = "x"
Y_TAG = "y"


@dataclass(frozen=True, order=True)
class Letter:
    """One letter: an x- or y-tag plus a 1-based index."""

    tag: str
    index: int

    @staticmethod
    def x(index: int) -> "Letter":
        return Letter(X_TAG, index)

    @staticmethod
    def y(index: int) -> "Letter":
        return Letter(Y_TAG, index)

    @property
    def is_x(self) -> bool:
        return self.tag == X_TAG

    def __str__(self) -> str:
        return f"{self.tag}{self.index}"


def _validate(letters: Sequence[Letter], m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise OutOfAlphabet(f"alphabet sizes must be nonnegative, got m={m} n={n}")
    seen = set()
    last_x = 0
    last_y = 0
    for letter in letters:
        if not isinstance(letter, Letter) or letter.tag not in (X_TAG, Y_TAG):
            raise WordError(f"not a letter: {letter!r}")
        bound = m if letter.is_x else n
        if letter.index < 1 or letter.index > bound:
            raise OutOfAlphabet(f"{letter} outside alphabet for m={m}, n={n}")
        if letter in seen:
            raise DuplicateLetter(f"duplicate letter {letter}")
        seen.add(letter)
        if letter.is_x:
            if letter.index <= last_x:
                raise NotIncreasing(f"x-letters out of order at {letter}")
            last_x = letter.index
        else:
            if letter.index <= last_y:
                raise NotIncreasing(f"y-letters out of order at {letter}")
            last_y = letter.index


@dataclass(frozen=True)
class ShuffleWord:
    """An immutable shuffle word together with its ambient alphabet sizes."""

    letters: tuple[Letter, ...]
    m: int
    n: int

    def __post_init__(self) -> None:
        _validate(self.letters, self.m, self.n)

    @cached_property
    def xsupport(self) -> tuple[int, ...]:
        return tuple(l.index for l in self.letters if l.is_x)

    @cached_property
    def ysupport(self) -> tuple[int, ...]:
        return tuple(l.index for l in self.letters if not l.is_x)

    @cached_property
    def inversions(self) -> frozenset[tuple[int, int]]:
        """Pairs (s, t) such that y_t occurs before x_s in this word."""
        pairs = []
        ys_seen: list[int] = []
        for letter in self.letters:
            if letter.is_x:
                pairs.extend((letter.index, t) for t in ys_seen)
            else:
                ys_seen.append(letter.index)
        return frozenset(pairs)

    @property
    def sort_key(self) -> tuple[tuple[str, int], ...]:
        # x-letters compare below y-letters, then by index: the canonical
        # code order used for deterministic enumeration and golden files.
        return tuple((l.tag, l.index) for l in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return word_text(self)

    def __repr__(self) -> str:
        return f"ShuffleWord({word_text(self)!r}, m={self.m}, n={self.n})"


def make_word(letters: Iterable[Letter], m: int, n: int) -> ShuffleWord:
    """Validate and build a shuffle word; raises a WordError subclass if invalid."""
    return ShuffleWord(tuple(letters), m, n)


def word_text(u: ShuffleWord) -> str:
    if not u.letters:
        return "-"
    return ".".join(str(l) for l in u.letters)


def parse_word(text: str, m: int, n: int) -> ShuffleWord:
    """Parse the dotted encoding, e.g. ``x1.y1.x2``; ``-`` is the empty word."""
    text = text.strip()
    if text in ("", "-"):
        return ShuffleWord((), m, n)
    letters = []
    for token in text.split("."):
        token = token.strip()
        if len(token) < 2 or token[0] not in (X_TAG, Y_TAG) or not token[1:].isdigit():
            raise WordError(f"bad letter token {token!r}")
        letters.append(Letter(token[0], int(token[1:])))
    return make_word(letters, m, n)


def count_shuffle(m: int, n: int) -> int:
    """Number of shuffle words, by summing interleavings over support pairs."""
    return sum(
        comb(m, a) * comb(n, b) * comb(a + b, a)
        for a in range(m + 1)
        for b in range(n + 1)
    )


def enumerate_shuffle(m: int, n: int) -> tuple[ShuffleWord, ...]:
    """All shuffle words for the given alphabet sizes, in canonical order."""
    if m < 0 or n < 0:
        raise OutOfAlphabet(f"alphabet sizes must be nonnegative, got m={m} n={n}")
    found: list[tuple[Letter, ...]] = []
    prefix: list[Letter] = []

    def extend(next_x: int, next_y: int) -> None:
        found.append(tuple(prefix))
        for i in range(next_x, m + 1):
            prefix.append(Letter.x(i))
            extend(i + 1, next_y)
            prefix.pop()
        for j in range(next_y, n + 1):
            prefix.append(Letter.y(j))
            extend(next_x, j + 1)
            prefix.pop()

    extend(1, 1)
    words = [ShuffleWord(ls, m, n) for ls in found]
    words.sort(key=lambda w: w.sort_key)
    return tuple(words)


def restriction(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """Subword of u formed by the letters common to u and v."""
    common = set(u.letters) & set(v.letters)
    return ShuffleWord(tuple(l for l in u.letters if l in common), u.m, u.n)


def inversions(u: ShuffleWord) -> frozenset[tuple[int, int]]:
    return u.inversions


def y_fill(u: ShuffleWord) -> ShuffleWord:
    """Insert the missing y-letters as far right as possible.

    Missing indices are processed in decreasing order; each y_j is inserted
    immediately left of the smallest present y_k with k > j, or appended at
    the end when no such letter exists.
    """
    present = set(u.ysupport)
    seq = list(u.letters)
    for j in range(u.n, 0, -1):
        if j in present:
            continue
        target = None
        for pos, letter in enumerate(seq):
            if not letter.is_x and letter.index > j:
                target = pos
                break
        if target is None:
            seq.append(Letter.y(j))
        else:
            seq.insert(target, Letter.y(j))
    return ShuffleWord(tuple(seq), u.m, u.n)


def dualize(u: ShuffleWord) -> ShuffleWord:
    """Exchange x's for y's (and vice versa); lands in the swapped family."""
    swapped = tuple(
        Letter.y(l.index) if l.is_x else Letter.x(l.index) for l in u.letters
    )
    return ShuffleWord(swapped, u.n, u.m)


def x_fill(u: ShuffleWord) -> ShuffleWord:
    """Insert the missing x-letters, dually to y_fill."""
    return dualize(y_fill(dualize(u)))


@dataclass(frozen=True)
class SupportProfile:
    """Supports plus inversion set: the data that determines a word uniquely."""

    xsupp: tuple[int, ...]
    ysupp: tuple[int, ...]
    inv: frozenset[tuple[int, int]]
    m: int
    n: int

    def __post_init__(self) -> None:
        for supp, bound, name in ((self.xsupp, self.m, "x"), (self.ysupp, self.n, "y")):
            if list(supp) != sorted(set(supp)):
                raise WordError(f"{name}-support must be strictly increasing")
            if supp and (supp[0] < 1 or supp[-1] > bound):
                raise OutOfAlphabet(f"{name}-support outside alphabet")
        xset, yset = set(self.xsupp), set(self.ysupp)
        for s, t in self.inv:
            if s not in xset or t not in yset:
                raise WordError(f"inversion ({s},{t}) mentions letters outside the supports")


def profile(u: ShuffleWord) -> SupportProfile:
    return SupportProfile(u.xsupport, u.ysupport, u.inversions, u.m, u.n)


def word_from_profile(p: SupportProfile) -> ShuffleWord:
    """The unique word with the given supports and inversion set.

    Realizable profiles are exactly those where each y-row of the inversion
    set is a suffix of the x-support and the rows weakly shrink as the
    y-index grows; anything else raises Unrealizable.
    """
    xs = p.xsupp
    rows: dict[int, tuple[int, ...]] = {}
    for t in p.ysupp:
        rows[t] = tuple(sorted(s for (s, tt) in p.inv if tt == t))
    prev_len = len(xs)
    for t in p.ysupp:
        row = rows[t]
        if row != xs[len(xs) - len(row):]:
            raise Unrealizable(f"inversions of y_{t} are not a suffix of the x-support")
        if len(row) > prev_len:
            raise Unrealizable(f"inversions of y_{t} exceed those of a smaller y-letter")
        prev_len = len(row)

    # y_t sits immediately before the x-suffix it is inverted with.
    slot = {t: len(xs) - len(rows[t]) for t in p.ysupp}
    seq: list[Letter] = []
    for k, s in enumerate(xs):
        seq.extend(Letter.y(t) for t in p.ysupp if slot[t] == k)
        seq.append(Letter.x(s))
    seq.extend(Letter.y(t) for t in p.ysupp if slot[t] == len(xs))
    return ShuffleWord(tuple(seq), p.m, p.n)
