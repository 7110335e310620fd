"""Bott-Samelson bimodule elements in a canonical left-module normal form.

For a word w = (w_1, ..., w_k) the Bott-Samelson bimodule is the tensor
product B_{w_1} (x) ... (x) B_{w_k} over R, where B_s = R (x)_{R^s} R.
Writing out the tensor factors gives k+1 polynomial slots separated by
k boundaries; the boundary at word position j is taken over the
s_{w_j}-invariant subring, so s_{w_j}-invariant polynomials slide across
it freely.

Since R is free of rank 2 over R^{s_i} with basis {1, x_i}, the bimodule
is a free left R-module on the 2^k basis tensors

    1 (x) x_{w_1}^{e_1} (x) ... (x) x_{w_k}^{e_k},    e in {0,1}^k.

A BSElement stores the coefficients of this basis, keyed by the bitmask
e (bit j-1 set means slot j carries x_{w_j}).  Normalization works right
to left: each slot polynomial splits as pi_0 + pi_1 * x_{w_j} with both
parts s_{w_j}-invariant, and the invariant parts slide one slot to the
left.  Normal forms are unique, so equality is plain map comparison.

The grading convention shifts each factor by 1, so the basis tensor of
mask e in a length-k word sits in degree 2*popcount(e) - k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .polyring import Polynomial
from .symgroup import Word


def basis_degree(mask: int, k: int) -> int:
    """Degree of the normal-form basis tensor with the given mask."""
    return 2 * int(mask).bit_count() - k


@dataclass(frozen=True)
class BSElement:
    """An element of the Bott-Samelson bimodule of ``word`` in normal form."""

    rank: int
    word: Word
    coeffs: Mapping[int, Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mask, c in self.coeffs.items():
            if not 0 <= mask < (1 << len(self.word)):
                raise ValueError(f"mask {mask} out of range for word of length {len(self.word)}")
            if c.rank != self.rank:
                raise ValueError("coefficient rank mismatch")
            if not c.is_zero():
                clean[mask] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "word", tuple(self.word))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, word: Word, rank: int) -> BSElement:
        return cls(rank, tuple(word), {})

    @classmethod
    def generator(cls, word: Word, rank: int) -> BSElement:
        """The distinguished generator 1 (x) 1 (x) ... (x) 1."""
        return cls(rank, tuple(word), {0: Polynomial.one(rank)})

    @classmethod
    def basis(cls, word: Word, mask: int, rank: int) -> BSElement:
        return cls(rank, tuple(word), {mask: Polynomial.one(rank)})

    # -- structure -----------------------------------------------------------

    def __add__(self, other: BSElement) -> BSElement:
        if self.word != other.word or self.rank != other.rank:
            raise ValueError("cannot add elements of different bimodules")
        coeffs = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            acc = coeffs.get(mask)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                coeffs.pop(mask, None)
            else:
                coeffs[mask] = acc
        return BSElement(self.rank, self.word, coeffs)

    def __neg__(self) -> BSElement:
        return BSElement(self.rank, self.word, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: BSElement) -> BSElement:
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_homogeneous_of_degree(self, d: int) -> bool:
        k = len(self.word)
        return all(
            c.is_homogeneous_of_degree(d - basis_degree(mask, k))
            for mask, c in self.coeffs.items()
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.word, frozenset((m, c) for m, c in self.coeffs.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BSElement):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.word == other.word
            and self.coeffs == other.coeffs
        )

    def slot_tensor(self, mask: int, extra: Polynomial | None = None) -> tuple[Polynomial, ...]:
        """The slot expansion (coeff, x^{e_1}, ..., x^{e_k}) of one basis term."""
        c = self.coeffs.get(mask)
        if c is None:
            c = Polynomial.zero(self.rank)
        if extra is not None:
            c = c * extra
        slots = [c]
        for j, letter in enumerate(self.word):
            if (mask >> j) & 1:
                slots.append(Polynomial.variable(letter, self.rank))
            else:
                slots.append(Polynomial.one(self.rank))
        return tuple(slots)

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "entries": [
                {"mask": mask, "poly": str(self.coeffs[mask])}
                for mask in sorted(self.coeffs)
            ],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        k = len(self.word)
        parts = []
        for mask in sorted(self.coeffs):
            bits = "".join(str((mask >> j) & 1) for j in range(k))
            parts.append(f"({self.coeffs[mask]})*e[{bits}]")
        return " + ".join(parts)


def from_tensor(word, slots: Sequence[Polynomial], rank: int) -> BSElement:
    """Normal form of the pure tensor slots[0] (x) slots[1] (x) ... (x) slots[k].

    Normalization runs right to left: the slot at word position j splits
    as pi_0 + pi_1 * x_{w_j} with s_{w_j}-invariant parts, which slide
    across the boundary into the slot to the left; the process branches
    over the kept basis monomial {1, x_{w_j}}.
    """
    word = tuple(word)
    k = len(word)
    if len(slots) != k + 1:
        raise ValueError(f"need {k + 1} slots for a word of length {k}, got {len(slots)}")
    for p in slots:
        if p.rank != rank:
            raise ValueError("slot rank mismatch")
    state: dict[int, Polynomial] = {0: slots[k]}
    for j in range(k, 0, -1):
        letter = word[j - 1]
        left = slots[j - 1]
        nxt: dict[int, Polynomial] = {}
        for mask, p in state.items():
            if p.is_zero():
                continue
            pi0, pi1 = p.split(letter)
            if not pi0.is_zero():
                nxt[mask] = left * pi0
            if not pi1.is_zero():
                nxt[mask | (1 << (j - 1))] = left * pi1
        state = nxt
    return BSElement(rank, word, state)


def left_mul(p: Polynomial, e: BSElement) -> BSElement:
    """Left action of R: multiply every normal-form coefficient."""
    if p.rank != e.rank:
        raise ValueError("rank mismatch")
    return BSElement(e.rank, e.word, {m: p * c for m, c in e.coeffs.items()})


def right_mul(e: BSElement, p: Polynomial) -> BSElement:
    """Right action of R: multiply the last slot, then renormalize."""
    if p.rank != e.rank:
        raise ValueError("rank mismatch")
    out = BSElement.zero(e.word, e.rank)
    for mask in e.coeffs:
        slots = list(e.slot_tensor(mask))
        slots[-1] = slots[-1] * p
        out = out + from_tensor(e.word, slots, e.rank)
    return out


def dot_cap(e: BSElement, factor: int) -> BSElement:
    """Image under the multiplication map on one tensor factor.

    The two slots around word position ``factor`` merge into their
    product; the word loses that letter and the result is renormalized.
    """
    k = len(e.word)
    if not 0 <= factor < k:
        raise ValueError(f"factor {factor} out of range for word of length {k}")
    new_word = e.word[:factor] + e.word[factor + 1:]
    out = BSElement.zero(new_word, e.rank)
    for mask in e.coeffs:
        slots = list(e.slot_tensor(mask))
        merged = slots[:factor] + [slots[factor] * slots[factor + 1]] + slots[factor + 2:]
        out = out + from_tensor(new_word, merged, e.rank)
    return out
