"""Stabilizer groups as symplectic row spaces over Z_d.

A stabilizer is an ordered list of mutually commuting, independent phaseless
Pauli operators.  All the questions this module answers (rank, membership,
normalizer tests, syndromes, logical count) reduce to exact Gaussian
elimination on the (x|z) matrix over the field Z_d; no floating point
appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iter_product
from typing import Iterable, Sequence

from . import _kernels
from .pauli import (
    DimensionMismatchError,
    PauliVec,
    inverse,
    multiply,
    symplectic_product,
    weight,
)

ENUMERATION_MAX_N = 12
DISCARD_MAX_REGISTERS = 9


class SizeLimitError(ValueError):
    """An exhaustive enumeration was requested beyond its configured bound."""


# A row is the length-2n tuple x + z over Z_d.  Echelon state is a tuple of
# (pivot column, normalized row) pairs sorted by pivot.
_Rows = tuple[tuple[int, tuple[int, ...]], ...]


def _vector(p: PauliVec) -> tuple[int, ...]:
    return p.x + p.z


def _reduce(vec: tuple[int, ...], rows: _Rows, d: int) -> tuple[int, ...]:
    """Eliminate vec at every pivot column; the residue is the canonical
    coset representative of vec modulo the row space."""
    v = list(vec)
    for pivot, row in rows:
        coef = v[pivot]
        if coef:
            for i in range(pivot, len(v)):
                v[i] = (v[i] - coef * row[i]) % d
    return tuple(v)


def _insert(rows: _Rows, vec: tuple[int, ...], d: int) -> _Rows | None:
    """Add vec to the echelon state; None if it is already in the span."""
    residue = _reduce(vec, rows, d)
    pivot = next((i for i, v in enumerate(residue) if v), None)
    if pivot is None:
        return None
    inv = pow(residue[pivot], -1, d)
    normalized = tuple(v * inv % d for v in residue)
    merged = sorted(rows + ((pivot, normalized),))
    return tuple(merged)


def rank(gens: Sequence[PauliVec]) -> int:
    """Rank of the (x|z) matrix of the given operators over Z_d."""
    if not gens:
        return 0
    d, n = gens[0].d, gens[0].n
    rows: _Rows = ()
    for g in gens:
        if g.d != d or g.n != n:
            raise DimensionMismatchError("generators disagree on d or n")
        updated = _insert(rows, _vector(g), d)
        if updated is not None:
            rows = updated
    return len(rows)


@dataclass(frozen=True)
class Syndrome:
    """Commutation values of an error against each generator, in order."""

    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_trivial(self) -> bool:
        return not any(self.values)


class StabilizerSet:
    """Immutable abelian, independent generator list with cached echelon form.

    ``extend`` returns a new set sharing the reduced-form lineage, so growing
    a stabilizer one measurement at a time costs one row reduction per step.
    """

    __slots__ = ("d", "n", "gens", "_rows")

    def __init__(self, d: int, n: int, gens: Sequence[PauliVec] = ()):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", ())
        object.__setattr__(self, "_rows", ())
        for g in gens:
            grown = self.extend(g)
            object.__setattr__(self, "gens", grown.gens)
            object.__setattr__(self, "_rows", grown._rows)

    def __setattr__(self, name, value):
        raise AttributeError("StabilizerSet is immutable")

    def __len__(self) -> int:
        return len(self.gens)

    def _check(self, p: PauliVec) -> None:
        if p.d != self.d or p.n != self.n:
            raise DimensionMismatchError(
                f"operator d={p.d},n={p.n} vs stabilizer d={self.d},n={self.n}"
            )

    def extend(self, p: PauliVec) -> StabilizerSet:
        """New StabilizerSet with p appended; p must commute with and be
        independent of the current generators."""
        self._check(p)
        if not self.in_normalizer(p):
            raise ValueError(f"{p} does not commute with the stabilizer")
        rows = _insert(self._rows, _vector(p), self.d)
        if rows is None:
            raise ValueError(f"{p} is dependent on the stabilizer")
        new = object.__new__(StabilizerSet)
        object.__setattr__(new, "d", self.d)
        object.__setattr__(new, "n", self.n)
        object.__setattr__(new, "gens", self.gens + (p,))
        object.__setattr__(new, "_rows", rows)
        return new

    @property
    def rank(self) -> int:
        return len(self._rows)

    def residue(self, p: PauliVec) -> tuple[int, ...]:
        """Canonical representative of p's coset modulo the row space."""
        self._check(p)
        return _reduce(_vector(p), self._rows, self.d)

    def is_member(self, p: PauliVec) -> bool:
        """Phaseless membership in the generated group."""
        return not any(self.residue(p))

    def in_normalizer(self, p: PauliVec) -> bool:
        """True iff p commutes with every generator."""
        self._check(p)
        return all(symplectic_product(p, g) == 0 for g in self.gens)

    def syndrome(self, e: PauliVec) -> Syndrome:
        """Per-generator commutation values, in measurement order."""
        self._check(e)
        return Syndrome(tuple(symplectic_product(g, e) for g in self.gens))

    def logical_count(self) -> int:
        """Number of unconstrained register pairs: n minus the rank."""
        return self.n - self.rank

    def span_elements(self) -> Iterable[PauliVec]:
        """Every element of the generated group (d^rank of them)."""
        base = [_vector(g) for g in self.gens]
        size = 2 * self.n
        for coeffs in _iter_product(range(self.d), repeat=len(base)):
            v = [0] * size
            for c, row in zip(coeffs, base):
                if c:
                    for i in range(size):
                        v[i] = (v[i] + c * row[i]) % self.d
            yield PauliVec(self.d, self.n, tuple(v[: self.n]), tuple(v[self.n :]))


def logical_count(s: StabilizerSet) -> int:
    return s.logical_count()


def _candidates_on(d: int, n: int, registers: Sequence[int]) -> Iterable[PauliVec]:
    """All nontrivial operators supported inside the given registers, in
    ascending canonical-key order."""
    sites = sorted(registers)
    dd = d * d
    for v in range(1, dd ** len(sites)):
        x = [0] * n
        z = [0] * n
        rest = v
        for site in sites:
            digit = rest % dd
            rest //= dd
            x[site] = digit % d
            z[site] = digit // d
        yield PauliVec(d, n, tuple(x), tuple(z))


def complete_discard(s: StabilizerSet, discard: Iterable[int]) -> list[PauliVec]:
    """Maximal list of operators supported inside the discarded registers,
    each commuting with the stabilizer and with all earlier picks, each
    independent of the span so far.

    Candidates are scanned once in ascending canonical-key order; a rejected
    candidate can never become addable later (constraints only accumulate),
    so the single pass reaches the fixpoint.
    """
    registers = frozenset(discard)
    if not registers:
        raise ValueError("discard set must be nonempty")
    if len(registers) > DISCARD_MAX_REGISTERS:
        raise SizeLimitError(
            f"discard completion enumerates over {len(registers)} registers "
            f"(bound {DISCARD_MAX_REGISTERS})"
        )
    if any(not 0 <= r < s.n for r in registers):
        raise ValueError("discard register out of range")
    added: list[PauliVec] = []
    current = s
    for cand in _candidates_on(s.d, s.n, sorted(registers)):
        if not current.in_normalizer(cand):
            continue
        if current.is_member(cand):
            continue
        current = current.extend(cand)
        added.append(cand)
    return added


def code_corrects(s: StabilizerSet, errors) -> bool:
    """Theorem-style correction test: no pair of candidate errors may differ
    by an undetectable operator (normalizer element outside the group)."""
    members = list(getattr(errors, "members", errors))
    for i, e in enumerate(members):
        e_inv = inverse(e)
        for f in members[i + 1 :]:
            diff = multiply(e_inv, f)
            if s.in_normalizer(diff) and not s.is_member(diff):
                return False
    return True


def _constraint_nullspace(s: StabilizerSet) -> list[tuple[int, ...]]:
    """Basis of the space of symplectic vectors commuting with every
    generator (the normalizer, as a Z_d space of dimension 2n - rank)."""
    d, n = s.d, s.n
    width = 2 * n
    # Row for generator g maps u=(x|z) to <g,u> = g.x . u.z - g.z . u.x.
    rows: _Rows = ()
    for g in s.gens:
        row = tuple((-v) % d for v in g.z) + g.x
        updated = _insert(rows, row, d)
        if updated is not None:
            rows = updated
    # Full reduction above each pivot so back-substitution reads directly.
    reduced = []
    for pivot, row in rows:
        r = list(row)
        for other_pivot, other in rows:
            if other_pivot > pivot and r[other_pivot]:
                coef = r[other_pivot]
                for i in range(other_pivot, width):
                    r[i] = (r[i] - coef * other[i]) % d
        reduced.append((pivot, tuple(r)))
    pivots = {p for p, _ in reduced}
    basis = []
    for free in range(width):
        if free in pivots:
            continue
        v = [0] * width
        v[free] = 1
        for pivot, row in reduced:
            v[pivot] = (-row[free]) % d
        basis.append(tuple(v))
    return basis


def normalizer_complement_basis(s: StabilizerSet) -> list[PauliVec]:
    """Vectors extending the stabilizer's row space to a basis of the
    normalizer; combinations with a nonzero part here are exactly the
    normalizer elements outside the group."""
    rows = s._rows
    complement: list[PauliVec] = []
    for vec in _constraint_nullspace(s):
        updated = _insert(rows, vec, s.d)
        if updated is not None:
            rows = updated
            complement.append(PauliVec(s.d, s.n, vec[: s.n], vec[s.n :]))
    return complement


def min_normalizer_weight(s: StabilizerSet) -> int:
    """Minimum weight over normalizer elements outside the group; the code
    corrects floor((result - 1) / 2) errors."""
    if s.n > ENUMERATION_MAX_N:
        raise SizeLimitError(
            f"normalizer scan needs n <= {ENUMERATION_MAX_N}, got {s.n}"
        )
    complement = normalizer_complement_basis(s)
    if not complement:
        raise ValueError("normalizer equals the stabilizer; nothing to scan")
    if s.d == 2:
        return _kernels.min_weight_excluding_span(
            [g.x_bits for g in s.gens],
            [g.z_bits for g in s.gens],
            [c.x_bits for c in complement],
            [c.z_bits for c in complement],
        )
    best = None
    span_vecs = [_vector(g) for g in s.gens]
    comp_vecs = [_vector(c) for c in complement]
    width = 2 * s.n
    for comp_coeffs in _iter_product(range(s.d), repeat=len(comp_vecs)):
        if not any(comp_coeffs):
            continue
        base = [0] * width
        for c, row in zip(comp_coeffs, comp_vecs):
            if c:
                for i in range(width):
                    base[i] = (base[i] + c * row[i]) % s.d
        for span_coeffs in _iter_product(range(s.d), repeat=len(span_vecs)):
            v = list(base)
            for c, row in zip(span_coeffs, span_vecs):
                if c:
                    for i in range(width):
                        v[i] = (v[i] + c * row[i]) % s.d
            w = sum(1 for i in range(s.n) if v[i] or v[i + s.n])
            if best is None or w < best:
                best = w
    return best
