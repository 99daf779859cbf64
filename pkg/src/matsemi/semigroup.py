"""Finitely generated matrix semigroups up to positive scaling.

Scaling a matrix by a positive rational changes nothing that this
package cares about (signs, zero patterns, diagonal similarity), so
closures are computed projectively: every product is replaced by its
canonical form, scaled so the largest entry magnitude component is 1.
That keeps closures finite in the cases of interest and keeps entry
sizes bounded.  Closures that hit a cap are marked truncated and no
downstream check is allowed to treat them as complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (Matrix, Scalar, classify_entries, inverse,
                    matrix_product, rank, rank_one_factor)


@dataclass(frozen=True)
class Caps:
    """Budgets for closure generation."""

    max_elements: int = 10000
    max_word_length: int = 12

    def __post_init__(self):
        if self.max_elements < 1 or self.max_word_length < 1:
            raise ValueError("caps must be positive")


def projective_canonical(m: Matrix) -> Matrix:
    """Scale by a positive rational so max(|re|, |im|) over entries is 1.

    The zero matrix is its own canonical form.
    """
    scale = Fraction(0)
    for e in m.entries:
        scale = max(scale, e.max_abs_part())
    if scale == 0:
        return m
    return m.scale(Scalar(1 / scale))


class ProjectiveElement:
    """A closure member: canonical matrix plus one generator word.

    Equality and hashing look at the canonical matrix only; the word is
    provenance (0-based generator indices, earliest discovered word).
    """

    __slots__ = ("canonical", "word")

    def __init__(self, canonical: Matrix, word: tuple[int, ...]):
        object.__setattr__(self, "canonical", canonical)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveElement is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjectiveElement):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"ProjectiveElement(word={self.word}, {self.canonical!r})"


@dataclass(frozen=True)
class SemigroupClosure:
    elements: tuple[ProjectiveElement, ...]
    truncated: bool
    caps: Caps

    def canonical_matrices(self) -> tuple[Matrix, ...]:
        return tuple(e.canonical for e in self.elements)

    def contains_matrix(self, m: Matrix) -> bool:
        c = projective_canonical(m)
        return any(e.canonical == c for e in self.elements)


@dataclass(frozen=True)
class GroupInfo:
    all_invertible: bool
    closed_under_inverse_within_cap: bool


@dataclass(frozen=True)
class XYFactorization:
    x_vectors: tuple[tuple[Scalar, ...], ...]
    y_vectors: tuple[tuple[Scalar, ...], ...]
    pairing: tuple[tuple[int, int], ...]  # element k -> (x index, y index)
    x_spans: bool
    y_spans: bool


def _validated_generators(gens: Sequence[Matrix]) -> int:
    if not gens:
        raise ValueError("semigroup needs at least one generator")
    n = gens[0].rows
    for g in gens:
        if not g.is_square or g.rows != n:
            raise ValueError("generators must be square of the same size")
    return n


def generate_closure(gens: Sequence[Matrix],
                     caps: Caps = Caps()) -> SemigroupClosure:
    """BFS closure under right multiplication by generators.

    Multiplying canonical forms on the right by original generators
    reaches a representative of every positive-scaling class of the
    semigroup: scalars commute past products.  Discovery order is by
    word length, then lexicographic word, so runs are reproducible.
    A product that would exceed a cap marks the closure truncated and
    is dropped.
    """
    _validated_generators(gens)
    elements: dict[Matrix, ProjectiveElement] = {}
    order: list[Matrix] = []
    truncated = False
    for gi, g in enumerate(gens):
        c = projective_canonical(g)
        if c not in elements:
            if len(elements) >= caps.max_elements:
                truncated = True
                continue
            elements[c] = ProjectiveElement(c, (gi,))
            order.append(c)
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        ue = elements[u]
        extendable = len(ue.word) < caps.max_word_length
        for gi, g in enumerate(gens):
            c = projective_canonical(matrix_product(u, g))
            if c in elements:
                continue
            if not extendable or len(elements) >= caps.max_elements:
                truncated = True
                continue
            elements[c] = ProjectiveElement(c, ue.word + (gi,))
            order.append(c)
    return SemigroupClosure(
        elements=tuple(elements[c] for c in order),
        truncated=truncated,
        caps=caps,
    )


def rank_one_ideal(closure: SemigroupClosure) -> tuple[ProjectiveElement, ...]:
    """Members of rank at most one, in closure order."""
    return tuple(e for e in closure.elements if rank(e.canonical) <= 1)


def algebra_dimension(gens: Sequence[Matrix]) -> int:
    """Dimension of the algebra spanned by the matrices and the identity.

    The span is grown by multiplying an echelonized basis by generators
    on both sides until it stabilises.  Exact elimination; the value is
    the same over any field extending the rationals because ranks of
    rational matrices do not change under field extension.
    """
    n = _validated_generators(gens)
    dim_target = n * n
    basis: list[list[Scalar]] = []  # echelon rows over entries

    def try_add(m: Matrix) -> bool:
        row = list(m.entries)
        for e in basis:
            lead = next(i for i, x in enumerate(e) if x)
            if row[lead]:
                f = row[lead] / e[lead]
                row = [x - f * y for x, y in zip(row, e)]
        if any(row):
            basis.append(row)
            return True
        return False

    frontier: list[Matrix] = []
    for m in [Matrix.identity(n), *gens]:
        if try_add(m):
            frontier.append(m)
    while frontier and len(basis) < dim_target:
        nxt: list[Matrix] = []
        for m in frontier:
            for g in gens:
                for prod in (matrix_product(m, g), matrix_product(g, m)):
                    if try_add(prod):
                        nxt.append(prod)
        frontier = nxt
    return len(basis)


def is_irreducible(gens: Sequence[Matrix]) -> bool:
    """No common invariant subspace besides {0} and everything.

    Equivalent to the generated algebra being the full matrix algebra,
    so the test is one exact dimension computation.
    """
    n = _validated_generators(gens)
    return algebra_dimension(gens) == n * n


def group_info(gens: Sequence[Matrix], caps: Caps = Caps(),
               closure: Optional[SemigroupClosure] = None) -> GroupInfo:
    """Invertibility of generators, and inverse-closure of the closure.

    The inverse check is projective: the canonical form of each member's
    inverse must itself be a member.  With a truncated closure (or any
    singular generator) the inverse-closure property is not established
    and is reported False.
    """
    _validated_generators(gens)
    n = gens[0].rows
    all_invertible = all(rank(g) == n for g in gens)
    if not all_invertible:
        return GroupInfo(False, False)
    if closure is None:
        closure = generate_closure(gens, caps)
    if closure.truncated:
        return GroupInfo(True, False)
    members = {e.canonical for e in closure.elements}
    for e in closure.elements:
        # members are products of invertible generators, so inversion succeeds
        if projective_canonical(inverse(e.canonical)) not in members:
            return GroupInfo(True, False)
    return GroupInfo(True, True)


def xy_decomposition(ideal: Sequence[ProjectiveElement]) -> XYFactorization:
    """Factor rank-one members as outer products and collect directions.

    Every nonzero member factors as x * y^T; the x and y directions are
    deduplicated projectively (positive scaling).  Zero members are
    skipped.  A member of rank two or more raises ValueError.
    """
    xs: list[tuple[Scalar, ...]] = []
    ys: list[tuple[Scalar, ...]] = []
    xi_of: dict[tuple[Scalar, ...], int] = {}
    yi_of: dict[tuple[Scalar, ...], int] = {}
    pairing: list[tuple[int, int]] = []
    nrows = None
    ncols = None
    for e in ideal:
        m = e.canonical
        nrows, ncols = m.rows, m.cols
        r = rank(m)
        if r > 1:
            raise ValueError("xy decomposition requires rank at most 1")
        if r == 0:
            pairing.append((-1, -1))
            continue
        x, y = rank_one_factor(m)
        x = _canonical_vector(x)
        y = _canonical_vector(y)
        if x not in xi_of:
            xi_of[x] = len(xs)
            xs.append(x)
        if y not in yi_of:
            yi_of[y] = len(ys)
            ys.append(y)
        pairing.append((xi_of[x], yi_of[y]))
    x_spans = _vectors_span(xs, nrows) if nrows else False
    y_spans = _vectors_span(ys, ncols) if ncols else False
    return XYFactorization(
        x_vectors=tuple(xs),
        y_vectors=tuple(ys),
        pairing=tuple(pairing),
        x_spans=x_spans,
        y_spans=y_spans,
    )


def _canonical_vector(v: tuple[Scalar, ...]) -> tuple[Scalar, ...]:
    scale = Fraction(0)
    for e in v:
        scale = max(scale, e.max_abs_part())
    if scale == 0:
        return v
    s = Scalar(1 / scale)
    return tuple(s * e for e in v)


def _vectors_span(vs: list[tuple[Scalar, ...]], n: int) -> bool:
    if not vs:
        return False
    return rank(Matrix(len(vs), n, [e for v in vs for e in v])) == n
