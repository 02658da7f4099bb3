"""Phaseless Pauli operators on prime-dimensional registers, in symplectic form.

An operator on ``n`` registers of dimension ``d`` is a pair of exponent
vectors ``(x, z)`` in Z_d^n: site ``i`` carries ``X^x[i] Z^z[i]``.  Global
phases are dropped, so the group law is componentwise addition mod d and
commutation reduces to the symplectic product.

Supported dimensions are the primes 2 and 3.  Text form for d=2 is a string
over ``I X Y Z`` (``Y`` is the phaseless ``XZ``); for d=3 it is a
comma-separated list of site tokens ``I X X2 Z Z2 XZ XZ2 X2Z X2Z2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

SUPPORTED_DIMENSIONS = (2, 3)

# Site letter <-> exponent pair, d=2.  Y acts on both components.
_QUBIT_LETTERS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_QUBIT_RENDER = {v: k for k, v in _QUBIT_LETTERS.items()}

# Site token <-> exponent pair, d=3.
_QUTRIT_TOKENS = {
    "I": (0, 0),
    "X": (1, 0),
    "X2": (2, 0),
    "Z": (0, 1),
    "Z2": (0, 2),
    "XZ": (1, 1),
    "XZ2": (1, 2),
    "X2Z": (2, 1),
    "X2Z2": (2, 2),
}
_QUTRIT_RENDER = {v: k for k, v in _QUTRIT_TOKENS.items()}


class DimensionMismatchError(ValueError):
    """Operands disagree on register dimension d or register count n."""


class PauliSyntaxError(ValueError):
    """Invalid Pauli text; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class PauliVec:
    """A phaseless Pauli operator as a symplectic vector over Z_d."""

    d: int
    n: int
    x: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        if self.d not in SUPPORTED_DIMENSIONS:
            raise ValueError(f"unsupported register dimension {self.d}")
        if len(self.x) != self.n or len(self.z) != self.n:
            raise ValueError("exponent vectors must have length n")
        if any(not 0 <= v < self.d for v in self.x + self.z):
            raise ValueError("exponents must lie in [0, d)")

    @classmethod
    def identity(cls, d: int, n: int) -> PauliVec:
        return cls(d, n, (0,) * n, (0,) * n)

    @classmethod
    def from_sites(cls, d: int, n: int, sites: dict[int, tuple[int, int]]) -> PauliVec:
        """Build an operator from a map of register index to (x, z) exponents."""
        x = [0] * n
        z = [0] * n
        for i, (xe, ze) in sites.items():
            x[i] = xe % d
            z[i] = ze % d
        return cls(d, n, tuple(x), tuple(z))

    @property
    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    @cached_property
    def x_bits(self) -> int:
        """x vector packed into one integer, register i at bit i (d=2 use)."""
        return sum(b << i for i, b in enumerate(self.x))

    @cached_property
    def z_bits(self) -> int:
        return sum(b << i for i, b in enumerate(self.z))

    def __str__(self) -> str:
        return render(self)


def _check_compatible(p: PauliVec, q: PauliVec) -> None:
    if p.d != q.d or p.n != q.n:
        raise DimensionMismatchError(
            f"operands differ: d={p.d},n={p.n} vs d={q.d},n={q.n}"
        )


def symplectic_product(p: PauliVec, q: PauliVec) -> int:
    """Commutation phase exponent of p and q, in Z_d.

    Zero iff the operators commute; for d=2 this is the anticommutation bit.
    """
    _check_compatible(p, q)
    total = 0
    for px, pz, qx, qz in zip(p.x, p.z, q.x, q.z):
        total += px * qz - pz * qx
    return total % p.d


def multiply(p: PauliVec, q: PauliVec) -> PauliVec:
    """Phaseless product: componentwise exponent addition mod d."""
    _check_compatible(p, q)
    d = p.d
    x = tuple((a + b) % d for a, b in zip(p.x, q.x))
    z = tuple((a + b) % d for a, b in zip(p.z, q.z))
    return PauliVec(d, p.n, x, z)


def inverse(p: PauliVec) -> PauliVec:
    """Phaseless inverse: exponents scaled by d-1 (for d=2 the operator itself)."""
    d = p.d
    return PauliVec(
        d, p.n, tuple((d - 1) * a % d for a in p.x), tuple((d - 1) * a % d for a in p.z)
    )


def weight(p: PauliVec) -> int:
    """Number of registers on which p acts nontrivially."""
    return sum(1 for xe, ze in zip(p.x, p.z) if xe or ze)


def canonical_key(p: PauliVec) -> int:
    """Total order on same-shape operators: base-d^2 digits x+d*z, site 0 least
    significant.  Per-site digit order is I < X < .. < Z < .. so that pure-X
    operators sort before pure-Z ones on the same support."""
    dd = p.d * p.d
    key = 0
    for i in range(p.n - 1, -1, -1):
        key = key * dd + (p.x[i] + p.d * p.z[i])
    return key


def parse(text: str, d: int) -> PauliVec:
    """Parse the canonical text form into a PauliVec."""
    if d == 2:
        x = []
        z = []
        for pos, ch in enumerate(text):
            if ch not in _QUBIT_LETTERS:
                raise PauliSyntaxError(f"invalid letter {ch!r} for d=2", pos)
            xe, ze = _QUBIT_LETTERS[ch]
            x.append(xe)
            z.append(ze)
        if not x:
            raise PauliSyntaxError("empty operator text", 0)
        return PauliVec(2, len(x), tuple(x), tuple(z))
    if d == 3:
        x = []
        z = []
        pos = 0
        for token in text.split(","):
            stripped = token.strip()
            if stripped not in _QUTRIT_TOKENS:
                raise PauliSyntaxError(f"invalid token {stripped!r} for d=3", pos)
            xe, ze = _QUTRIT_TOKENS[stripped]
            x.append(xe)
            z.append(ze)
            pos += len(token) + 1
        return PauliVec(3, len(x), tuple(x), tuple(z))
    raise ValueError(f"unsupported register dimension {d}")


def render(p: PauliVec) -> str:
    """Render to canonical text; inverse of parse on valid input."""
    if p.d == 2:
        return "".join(_QUBIT_RENDER[xz] for xz in zip(p.x, p.z))
    return ",".join(_QUTRIT_RENDER[xz] for xz in zip(p.x, p.z))
