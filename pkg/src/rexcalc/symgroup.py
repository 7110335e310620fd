"""Symmetric group combinatorics: permutations, words, and braid moves.

Elements of S_n act on {1, ..., n}; the generators are the adjacent
transpositions s_i = (i i+1) for 1 <= i <= n-1.  A word is a tuple of
generator indices, written 1-based so the word (1, 2, 1) is s_1 s_2 s_1;
it is reduced when its length equals the Coxeter length of its product.

Two reduced words of the same element differ by a chain of braid moves:
the adjacent relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and the
distant relation s_i s_j = s_j s_i for |i - j| >= 2.  The closure of one
reduced word under single braid moves is the full set of reduced words,
which is how ``reduced_words`` enumerates them.

>>> word_to_perm((1, 2, 1), 3).images
(3, 2, 1)
>>> longest_element(4)
(1, 2, 1, 3, 2, 1)
>>> sorted(w for _, w in braid_moves((1, 2, 1)))
[(2, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

Word = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: images[i-1] = w(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple_reflection(cls, i: int, n: int) -> Permutation:
        """The transposition s_i = (i i+1) in S_n."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range 1..{n - 1}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The order-reversing permutation i -> n+1-i."""
        return cls(tuple(range(n, 0, -1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition u * v = u after v, so (u*v)(i) = u(v(i))."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        img = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if img[a] > img[b])

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(self.n))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


DISTANT = "distant"
UP = "up"
DOWN = "down"


@dataclass(frozen=True)
class BraidMove:
    """A single braid relation applied at a 0-based position of a word.

    Kinds:
      distant: (i, j) with |i-j| >= 2 rewrites the window (i, j) -> (j, i)
      up:      parameter i rewrites (i, i+1, i) -> (i+1, i, i+1)
      down:    parameter i rewrites (i+1, i, i+1) -> (i, i+1, i)

    The up direction agrees with the Manin-Schechtman orientation of
    adjacent edges.
    """

    position: int
    kind: str
    i: int
    j: int = 0  # second letter, distant moves only

    def __post_init__(self):
        if self.kind not in (DISTANT, UP, DOWN):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind == DISTANT and abs(self.i - self.j) < 2:
            raise ValueError(f"letters {self.i}, {self.j} are not distant")

    @property
    def width(self) -> int:
        return 2 if self.kind == DISTANT else 3

    def source_window(self) -> Word:
        if self.kind == DISTANT:
            return (self.i, self.j)
        if self.kind == UP:
            return (self.i, self.i + 1, self.i)
        return (self.i + 1, self.i, self.i + 1)

    def target_window(self) -> Word:
        return self.reversed().source_window()

    def reversed(self) -> BraidMove:
        if self.kind == DISTANT:
            return BraidMove(self.position, DISTANT, self.j, self.i)
        return BraidMove(self.position, UP if self.kind == DOWN else DOWN, self.i)

    def applies_to(self, word: Word) -> bool:
        p = self.position
        return word[p:p + self.width] == self.source_window()

    def apply(self, word: Word) -> Word:
        if not self.applies_to(word):
            raise ValueError(f"move {self} does not apply to {word}")
        p = self.position
        return word[:p] + self.target_window() + word[p + self.width:]


def word_to_perm(word, n: int) -> Permutation:
    """Multiply out a word of generator indices, left to right.

    >>> word_to_perm((1, 2, 3, 2, 1), 4).images
    (4, 2, 3, 1)
    """
    word = tuple(word)
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise ValueError(f"letter {letter} out of range 1..{n - 1}")
    return reduce(
        lambda acc, i: acc * Permutation.simple_reflection(i, n),
        word,
        Permutation.identity(n),
    )


def is_reduced(word, n: int) -> bool:
    """True iff the word length equals the Coxeter length of its product."""
    word = tuple(word)
    return len(word) == word_to_perm(word, n).length()


def longest_element(n: int) -> Word:
    """The standard reduced word for the longest element of S_n.

    Built inductively by appending k, k-1, ..., 1 for k = 2, ..., n-1,
    so its length is n(n-1)/2.

    >>> [longest_element(n) for n in (2, 3, 4)]
    [(1,), (1, 2, 1), (1, 2, 1, 3, 2, 1)]
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    word: list[int] = [1]
    for k in range(2, n):
        word.extend(range(k, 0, -1))
    return tuple(word)


_KIND_ORDER = {DISTANT: 0, UP: 1, DOWN: 2}


def braid_moves(word) -> list[tuple[BraidMove, Word]]:
    """All single braid moves applicable to a word, with their results.

    Results are listed deterministically by (position, kind).  If the
    input is reduced, every result is reduced and represents the same
    group element.
    """
    word = tuple(word)
    found: list[tuple[BraidMove, Word]] = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) >= 2:
            found.append((BraidMove(p, DISTANT, a, b), None))
        elif p + 2 < len(word) and word[p + 2] == a:
            kind = UP if b == a + 1 else DOWN
            found.append((BraidMove(p, kind, min(a, b)), None))
    found.sort(key=lambda mw: (mw[0].position, _KIND_ORDER[mw[0].kind]))
    return [(move, move.apply(word)) for move, _ in found]


def _seed_reduced_word(perm: Permutation) -> Word:
    # peel right descents: w(i) > w(i+1) means l(w s_i) = l(w) - 1
    word: list[int] = []
    q = perm
    while not q.is_identity():
        i = next(i for i in range(1, q.n) if q(i) > q(i + 1))
        word.append(i)
        q = q * Permutation.simple_reflection(i, q.n)
    return tuple(reversed(word))


def reduced_words(perm: Permutation) -> list[Word]:
    """All reduced words of a permutation, sorted lexicographically.

    Computed as the breadth-first closure of one reduced word under
    single braid moves; the closure does not depend on the seed.
    """
    seed = _seed_reduced_word(perm)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for _, w2 in braid_moves(w):
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
        frontier = nxt
    return sorted(seen)


def n_statistic(word) -> int:
    """Sum of the letters; constant on clouds (distant moves preserve it)."""
    return sum(word)


def all_permutations(n: int) -> list[Permutation]:
    """All n! permutations, sorted by one-line notation."""
    from itertools import permutations as iperm

    return [Permutation(p) for p in sorted(iperm(range(1, n + 1)))]
