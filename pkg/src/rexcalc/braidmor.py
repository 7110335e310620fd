"""Braid-move morphisms between Bott-Samelson bimodules, as exact matrices.

For each braid relation there is a unique degree-0 bimodule morphism
f sending the distinguished generator to the distinguished generator:

  distant, letters i, j with |i-j| >= 2:
      f : B_i B_j -> B_j B_i is determined by f(1t) = 1t alone (writing
      1t for the all-ones tensor);
  adjacent, up, window (i, i+1, i) -> (i+1, i, i+1):
      additionally f(1 (x) x_i (x) 1 (x) 1)
          = (x_i + x_{i+1}) (x) 1 (x) 1 (x) 1  -  1 (x) 1 (x) 1 (x) x_{i+2};
  adjacent, down, window (i, i-1, i) -> (i-1, i, i-1):
      additionally f(1 (x) x_{i+1} (x) 1 (x) 1)
          = 1 (x) 1 (x) 1 (x) (x_i + x_{i+1})  -  x_{i-1} (x) 1 (x) 1 (x) 1.

A local image table records f on every normal-form basis tensor of the
window.  Each basis tensor is first rewritten as a two-sided polynomial
combination of the defining generators, using only (a) sliding of
invariant polynomials across tensor boundaries and (b) the substitutions
x_{i+1} = (x_i + x_{i+1}) - x_i and x_{i+1} = (x_{i+1} + x_{i+2}) - x_{i+2};
the generators are then mapped by the formulas above and the result is
renormalized.  The rewrite is re-verified at table build time by
reassembling the expression in the source window; any mismatch is a
hard error rather than a silent extension.

Whole-word edge morphisms Id (x) f (x) Id act on a stored basis term by
looking up the window mask in the table, multiplying the image's left
coefficient into the slot left of the window, and renormalizing.  Path
morphisms are ordered products of edge matrices over the normal-form
bases; they are faithful because those bases are free, so path equality
questions reduce to entrywise polynomial equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bsbimod import BSElement, from_tensor, left_mul, right_mul
from .polyring import Polynomial
from .rexgraph import CONFLATED, EXPANDED, ConflatedGraph, Path, RexGraph, lift_conflated_path
from .symgroup import DISTANT, UP, BraidMove, Word, braid_moves


@dataclass(frozen=True, eq=False)
class LocalImageTable:
    """Images of all window basis tensors under one braid morphism."""

    rank: int
    kind: str
    source_window: Word
    target_window: Word
    images: tuple[BSElement, ...]  # indexed by source window mask


def _x(i: int, rank: int) -> Polynomial:
    return Polynomial.variable(i, rank)


def _express_adjacent_slots(
    p: int, q: int, slots: tuple[Polynomial, ...], rank: int
) -> list[tuple[Polynomial, int, Polynomial]]:
    """Rewrite a window tensor over (p, q, p) as sum of left * G * right.

    G is generator 0 (the all-ones tensor) or generator 1 (the extra
    defining generator of the adjacent morphism).  The outer slots peel
    off as two-sided multipliers; the middle slots reduce by invariant
    splitting plus the two substitution rules.
    """
    h0, h1, h2, h3 = slots
    out: list[tuple[Polynomial, int, Polynomial]] = []
    pieces: list[tuple[Polynomial, Polynomial]] = []  # (slot-1 content, right multiplier)
    b0, b1 = h2.split(q)
    if not b0.is_zero():
        pieces.append((h1 * b0, h3))
    if not b1.is_zero():
        if q == p + 1:
            # x_q = (x_q + x_{q+1}) - x_{q+1}; the sum slides left across the
            # s_q boundary, the single variable slides right across s_p
            r = q + 1
            pieces.append((h1 * b1 * (_x(q, rank) + _x(r, rank)), h3))
            pieces.append((-(h1 * b1), _x(r, rank) * h3))
        else:
            # q = p - 1: x_q is s_p-invariant and slides right as-is
            pieces.append((h1 * b1, _x(q, rank) * h3))
    for g, rpoly in pieces:
        c0, c1 = g.split(p)
        if not c0.is_zero():
            out.append((h0 * c0, 0, rpoly))
        if not c1.is_zero():
            if q == p + 1:
                out.append((h0 * c1, 1, rpoly))
            else:
                # x_p = (x_p + x_{p+1}) - x_{p+1}; generator 1 carries x_{p+1}
                out.append((h0 * c1 * (_x(p, rank) + _x(p + 1, rank)), 0, rpoly))
                out.append((-(h0 * c1), 1, rpoly))
    return out


def _combine(
    expr: list[tuple[Polynomial, int, Polynomial]],
    gens: tuple[BSElement, ...],
) -> BSElement:
    word = gens[0].word
    rank = gens[0].rank
    acc = BSElement.zero(word, rank)
    for left, g, right in expr:
        acc = acc + left_mul(left, right_mul(gens[g], right))
    return acc


@lru_cache(maxsize=None)
def _adjacent_table(i: int, kind: str, rank: int) -> LocalImageTable:
    # window letters (p, q, p): up moves have q = p + 1, down have q = p - 1
    p, q = (i, i + 1) if kind == UP else (i + 1, i)
    for letter in (p, q):
        if not 1 <= letter <= rank - 1:
            raise ValueError(f"letter {letter} out of range for rank {rank}")
    src: Word = (p, q, p)
    dst: Word = (q, p, q)
    one = Polynomial.one(rank)
    src_gens = (
        BSElement.generator(src, rank),
        from_tensor(src, (one, _x(p, rank) if q == p + 1 else _x(p + 1, rank), one, one), rank),
    )
    if q == p + 1:
        gen1_image = from_tensor(dst, (_x(p, rank) + _x(q, rank), one, one, one), rank) - from_tensor(
            dst, (one, one, one, _x(p + 2, rank)), rank
        )
    else:
        gen1_image = from_tensor(dst, (one, one, one, _x(p, rank) + _x(p + 1, rank)), rank) - from_tensor(
            dst, (_x(p - 1, rank), one, one, one), rank
        )
    dst_gens = (BSElement.generator(dst, rank), gen1_image)
    images = []
    for mask in range(8):
        slots = tuple(
            [one]
            + [
                _x(letter, rank) if (mask >> t) & 1 else one
                for t, letter in enumerate(src)
            ]
        )
        expr = _express_adjacent_slots(p, q, slots, rank)
        # re-verify the rewrite in the source window before trusting it
        check = _combine(expr, src_gens)
        if check != BSElement.basis(src, mask, rank):
            raise RuntimeError(f"window rewrite failed for mask {mask} of {src}")
        images.append(_combine(expr, dst_gens))
    return LocalImageTable(rank, kind, src, dst, tuple(images))


@lru_cache(maxsize=None)
def _distant_table(i: int, j: int, rank: int) -> LocalImageTable:
    if abs(i - j) < 2:
        raise ValueError(f"letters {i}, {j} are not distant")
    for letter in (i, j):
        if not 1 <= letter <= rank - 1:
            raise ValueError(f"letter {letter} out of range for rank {rank}")
    src: Word = (i, j)
    dst: Word = (j, i)
    one = Polynomial.one(rank)
    images = []
    for mask in range(4):
        # 1 (x) x_i^a (x) x_j^b equals the all-ones tensor times x_i^a x_j^b
        # on the right, since x_i slides across the s_j boundary
        a, b = mask & 1, (mask >> 1) & 1
        mult = (_x(i, rank) ** a) * (_x(j, rank) ** b)
        check = from_tensor(src, (one, one, mult), rank)
        if check != BSElement.basis(src, mask, rank):
            raise RuntimeError(f"window rewrite failed for mask {mask} of {src}")
        images.append(from_tensor(dst, (one, one, mult), rank))
    return LocalImageTable(rank, DISTANT, src, dst, tuple(images))


def derive_local_table(move: BraidMove, rank: int) -> LocalImageTable:
    """The cached local image table realizing one braid move."""
    if move.kind == DISTANT:
        return _distant_table(move.i, move.j, rank)
    return _adjacent_table(move.i, move.kind, rank)


def apply_edge(elem: BSElement, move: BraidMove) -> BSElement:
    """Apply Id (x) f (x) Id for the braid move to a normal-form element."""
    if not move.applies_to(elem.word):
        raise ValueError(f"move {move} does not apply to word {elem.word}")
    table = derive_local_table(move, elem.rank)
    pos, m = move.position, move.width
    new_word = elem.word[:pos] + table.target_window + elem.word[pos + m:]
    one = Polynomial.one(elem.rank)
    out = BSElement.zero(new_word, elem.rank)
    for mask, coeff in elem.coeffs.items():
        window_mask = (mask >> pos) & ((1 << m) - 1)
        image = table.images[window_mask]
        for imask, icoeff in image.coeffs.items():
            slots = [coeff]
            for t, letter in enumerate(new_word):
                if pos <= t < pos + m:
                    bit = (imask >> (t - pos)) & 1
                else:
                    bit = (mask >> t) & 1
                slots.append(_x(letter, elem.rank) if bit else one)
            # the image's left coefficient crosses the plain tensor-over-R
            # boundary into the slot left of the window
            slots[pos] = slots[pos] * icoeff
            out = out + from_tensor(new_word, slots, elem.rank)
    return out


class MorphismMatrix:
    """A left-R-linear map between normal-form bases, stored column-sparse.

    Column c holds the image of the domain basis tensor with mask c,
    expanded over the codomain basis (rows).  Matrices are faithful
    because the bases are free left-module bases, so equality of path
    morphisms is entrywise polynomial equality.
    """

    __slots__ = ("rank", "domain", "codomain", "cols", "_key")

    def __init__(self, rank: int, domain: Word, codomain: Word, cols):
        if len(domain) != len(codomain):
            raise ValueError("braid moves preserve word length")
        self.rank = rank
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.cols: dict[int, dict[int, Polynomial]] = {
            c: {r: p for r, p in col.items() if not p.is_zero()}
            for c, col in cols.items()
        }
        self.cols = {c: col for c, col in self.cols.items() if col}
        self._key = None

    @classmethod
    def identity(cls, word: Word, rank: int) -> MorphismMatrix:
        one = Polynomial.one(rank)
        k = len(word)
        return cls(rank, word, word, {c: {c: one} for c in range(1 << k)})

    @classmethod
    def for_edge(cls, move: BraidMove, word: Word, rank: int) -> MorphismMatrix:
        """Matrix of apply_edge over all domain basis masks."""
        word = tuple(word)
        cols = {}
        target = None
        for c in range(1 << len(word)):
            img = apply_edge(BSElement.basis(word, c, rank), move)
            target = img.word
            cols[c] = dict(img.coeffs)
        return cls(rank, word, target, cols)

    def entry(self, row: int, col: int) -> Polynomial:
        return self.cols.get(col, {}).get(row, Polynomial.zero(self.rank))

    def compose(self, other: MorphismMatrix) -> MorphismMatrix:
        """self after other (matrix product self . other)."""
        if other.codomain != self.domain or other.rank != self.rank:
            raise ValueError("composition shape mismatch")
        cols: dict[int, dict[int, Polynomial]] = {}
        for c, col in other.cols.items():
            acc: dict[int, Polynomial] = {}
            for m, pmc in col.items():
                for r, prm in self.cols.get(m, {}).items():
                    prod = prm * pmc
                    cur = acc.get(r)
                    acc[r] = prod if cur is None else cur + prod
            cols[c] = acc
        return MorphismMatrix(self.rank, other.domain, self.codomain, cols)

    def __mul__(self, other: MorphismMatrix) -> MorphismMatrix:
        return self.compose(other)

    def apply(self, elem: BSElement) -> BSElement:
        """Evaluate the morphism on a normal-form element."""
        if elem.word != self.domain or elem.rank != self.rank:
            raise ValueError("element does not live in the domain bimodule")
        acc: dict[int, Polynomial] = {}
        for c, coeff in elem.coeffs.items():
            for r, p in self.cols.get(c, {}).items():
                prod = coeff * p
                cur = acc.get(r)
                acc[r] = prod if cur is None else cur + prod
        return BSElement(self.rank, self.codomain, acc)

    def key(self) -> tuple:
        """Canonical hashable form for interning and comparison."""
        if self._key is None:
            entries = []
            for c in sorted(self.cols):
                for r in sorted(self.cols[c]):
                    entries.append((r, c, self.cols[c][r].key()))
            self._key = (self.domain, self.codomain, tuple(entries))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, MorphismMatrix):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.cols == other.cols
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def is_homogeneous(self) -> bool:
        """Check every entry sits in degree 2 * (popcount(col) - popcount(row))."""
        return all(
            p.is_homogeneous_of_degree(2 * (int(c).bit_count() - int(r).bit_count()))
            for c, col in self.cols.items()
            for r, p in col.items()
        )

    def nonzero_entries(self) -> list[tuple[int, int, Polynomial]]:
        return [
            (r, c, self.cols[c][r])
            for c in sorted(self.cols)
            for r in sorted(self.cols[c])
        ]

    def to_json(self) -> dict:
        return {
            "domain": list(self.domain),
            "codomain": list(self.codomain),
            "entries": [
                {"row": r, "col": c, "poly": str(p)} for r, c, p in self.nonzero_entries()
            ],
        }

    def __repr__(self) -> str:
        return (
            f"MorphismMatrix({''.join(map(str, self.domain))} -> "
            f"{''.join(map(str, self.codomain))}, {sum(len(c) for c in self.cols.values())} entries)"
        )


@lru_cache(maxsize=None)
def _edge_matrix_cached(move: BraidMove, word: Word, rank: int) -> MorphismMatrix:
    return MorphismMatrix.for_edge(move, word, rank)


def edge_matrix(move: BraidMove, word, rank: int) -> MorphismMatrix:
    """Matrix of the edge morphism Id (x) f (x) Id on the word's bimodule."""
    return _edge_matrix_cached(move, tuple(word), rank)


def move_between(u: Word, v: Word) -> BraidMove:
    """The braid move rewriting u into v (first in canonical order)."""
    for move, w2 in braid_moves(u):
        if w2 == tuple(v):
            return move
    raise ValueError(f"{u} and {v} do not differ by a single braid move")


def path_morphism(path: Path, rank: int) -> MorphismMatrix:
    """Ordered product of edge matrices along an expanded-graph path."""
    if path.kind != EXPANDED:
        raise ValueError("path_morphism expects an expanded path")
    words = path.vertices
    acc = MorphismMatrix.identity(words[0], rank)
    for u, v in zip(words, words[1:]):
        acc = edge_matrix(move_between(u, v), u, rank).compose(acc)
    return acc


def conflated_path_morphism(
    conflated: ConflatedGraph, graph: RexGraph, path: Path
) -> MorphismMatrix:
    """Morphism of a conflated path via its lift, with representative endpoints."""
    lifted = lift_conflated_path(conflated, graph, path)
    return path_morphism(lifted, graph.rank)


def matrices_equal(a: MorphismMatrix, b: MorphismMatrix) -> bool:
    """Entrywise equality; raises on domain or codomain mismatch."""
    if a.domain != b.domain or a.codomain != b.codomain:
        raise ValueError("matrix shape mismatch")
    return a == b


class ConflatedMorphisms:
    """Per-edge matrices of a conflated graph, with path composition.

    Each oriented cloud edge gets a forward and a backward matrix whose
    endpoints are the cloud representatives, so conflated paths compose
    by chaining matrices; well-definedness of the conflated path
    morphism makes this agree with lifting the whole path at once.
    """

    def __init__(self, graph: RexGraph, conflated: ConflatedGraph):
        self.graph = graph
        self.conflated = conflated
        self.rank = graph.rank
        self.forward: dict[tuple[Word, Word], MorphismMatrix] = {}
        self.backward: dict[tuple[Word, Word], MorphismMatrix] = {}
        for e in conflated.edges:
            key = (e.source.representative, e.target.representative)
            fwd = conflated_path_morphism(
                conflated, graph, Path(CONFLATED, (key[0], key[1]))
            )
            bwd = conflated_path_morphism(
                conflated, graph, Path(CONFLATED, (key[1], key[0]))
            )
            self.forward[key] = fwd
            self.backward[(key[1], key[0])] = bwd

    def step_matrix(self, a: Word, b: Word) -> MorphismMatrix:
        m = self.forward.get((a, b)) or self.backward.get((a, b))
        if m is None:
            raise ValueError(f"no conflated edge between {a} and {b}")
        return m

    def path_matrix(self, vertices) -> MorphismMatrix:
        vertices = [tuple(v) for v in vertices]
        acc = MorphismMatrix.identity(vertices[0], self.rank)
        for a, b in zip(vertices, vertices[1:]):
            acc = self.step_matrix(a, b).compose(acc)
        return acc
