"""Pure-Python scan kernels over bit-packed qubit operators.

Reference implementations of the hot loops; ``twep._speedups`` provides
drop-in compiled versions with identical results.  Operators are packed as
two integers (x bits, z bits), register i at bit i.  All functions assume
d=2; the qutrit paths elsewhere stay in tuple arithmetic.

Group elements are enumerated as XOR combinations of basis rows via Gray
codes, so each visited element costs one XOR pair.
"""

from __future__ import annotations


def _gray_steps(k: int):
    """Yield the basis index flipped at each Gray-code increment for 2^k steps."""
    for idx in range(1, 1 << k):
        yield (idx & -idx).bit_length() - 1


def min_weight_excluding_span(
    span_x: list[int],
    span_z: list[int],
    comp_x: list[int],
    comp_z: list[int],
) -> int:
    """Minimum weight over {c + s} with c a nonzero combination of the
    complement basis and s any combination of the span basis.

    With span = a stabilizer's row space and complement completing it to the
    normalizer, this scans exactly the normalizer minus the stabilizer.
    """
    nc = len(comp_x)
    ns = len(span_x)
    if nc == 0:
        raise ValueError("complement basis is empty: nothing outside the span")
    best = None
    cx = cz = 0
    for j in _gray_steps(nc):
        cx ^= comp_x[j]
        cz ^= comp_z[j]
        vx, vz = cx, cz
        w = (vx | vz).bit_count()
        if best is None or w < best:
            best = w
        for i in _gray_steps(ns):
            vx ^= span_x[i]
            vz ^= span_z[i]
            w = (vx | vz).bit_count()
            if w < best:
                best = w
    return best


def _interleave_key(x: int, z: int, n: int) -> int:
    """Canonical operator key: base-4 digits x+2z, register 0 least significant."""
    key = 0
    for i in range(n - 1, -1, -1):
        key = (key << 2) | (((x >> i) & 1) | (((z >> i) & 1) << 1))
    return key


def best_splitter(
    span_x: list[int],
    span_z: list[int],
    comp_x: list[int],
    comp_z: list[int],
    err_x: list[int],
    err_z: list[int],
    n: int,
) -> tuple[int, int, int, int]:
    """Scan the normalizer-minus-span for the operator that splits the error
    list most evenly.

    Returns (x, z, commuting, anticommuting) for the winner.  Candidates are
    ranked by smallest max(|C|, |A|); ties go to the smallest canonical key.
    Adding a span element to a candidate never changes its split sizes, so
    the split is computed once per complement combination and the span
    combinations only compete on key.
    """
    nc = len(comp_x)
    ns = len(span_x)
    ne = len(err_x)
    if nc == 0:
        raise ValueError("complement basis is empty: nothing outside the span")
    best_m = ne + 1
    best_key = None
    best_x = best_z = 0
    cx = cz = 0
    for j in _gray_steps(nc):
        cx ^= comp_x[j]
        cz ^= comp_z[j]
        anti = 0
        for ex, ez in zip(err_x, err_z):
            anti += ((cx & ez) ^ (cz & ex)).bit_count() & 1
        m = max(anti, ne - anti)
        if m > best_m:
            continue
        if m < best_m:
            best_m = m
            best_key = None
        vx, vz = cx, cz
        key = _interleave_key(vx, vz, n)
        if best_key is None or key < best_key:
            best_key, best_x, best_z = key, vx, vz
        for i in _gray_steps(ns):
            vx ^= span_x[i]
            vz ^= span_z[i]
            key = _interleave_key(vx, vz, n)
            if key < best_key:
                best_key, best_x, best_z = key, vx, vz
    anti = 0
    for ex, ez in zip(err_x, err_z):
        anti += ((best_x & ez) ^ (best_z & ex)).bit_count() & 1
    return best_x, best_z, ne - anti, anti
