"""Adaptive protocol execution: simulate, correct, exhaustively verify.

The model: a strategy is consulted with the measurement history so far and
answers with one of three actions.  Measure adds a commuting, independent
operator; the environment answers with its commutation value against the
hidden error.  Discard expands into a deterministic completion of local
measurements on the dropped registers, making every protocol a pure
adaptive stabilizer protocol.  Finish computes a correction from the
candidate errors still consistent with every outcome; it is only legal once
all survivors act identically on the protected space (one coset of the
accumulated stabilizer).

Verification simulates the strategy against every error of weight at most t
and accepts only if every single run ends with a consistent correction and
enough certified pairs.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import errorspace
from .errorspace import DEFAULT_CAP, coset_classes, filter_by_outcome
from .pauli import PauliVec, inverse, multiply, render, symplectic_product, weight
from .stabilizer import StabilizerSet, complete_discard


class ProtocolError(Exception):
    """A simulation rule was violated; verify() reports these as failures."""


class IllegalMeasurement(ProtocolError):
    """Measured operator anticommutes with an earlier one."""


class RedundantMeasurement(ProtocolError):
    """Measured operator is already in the span of earlier measurements."""


class UnsoundFinish(ProtocolError):
    """Finish requested while surviving errors still span several cosets."""


class EmptyCandidates(ProtocolError):
    """No error within the weight bound matches the observed outcomes."""


class NonTerminationError(ProtocolError):
    """Strategy exceeded the consultation budget of 2n steps."""


@dataclass(frozen=True)
class Measure:
    op: PauliVec


@dataclass(frozen=True)
class Discard:
    registers: frozenset[int]


@dataclass(frozen=True)
class Finish:
    pass


Step = Measure | Discard | Finish


@dataclass(frozen=True)
class History:
    """Ordered measurement record, plus which discards were already expanded.

    The discard record exists because a completion can legally add zero
    measurements, in which case the entry list alone cannot tell a strategy
    whether its discard has happened yet.
    """

    entries: tuple[tuple[PauliVec, int], ...] = ()
    discards: tuple[frozenset[int], ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def with_entry(self, op: PauliVec, outcome: int) -> History:
        return History(self.entries + ((op, outcome),), self.discards)

    def with_discard(self, registers: frozenset[int]) -> History:
        return History(self.entries, self.discards + (registers,))

    def operators(self) -> tuple[PauliVec, ...]:
        return tuple(op for op, _ in self.entries)

    def outcomes(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.entries)


@dataclass(frozen=True)
class Strategy:
    """A deterministic protocol: parameters plus a pure history -> step map."""

    d: int
    n: int
    t: int
    k_claimed: int
    next: Callable[[History], Step]
    name: str = ""


@dataclass(frozen=True)
class Transcript:
    """One simulated run."""

    history: History
    final_stabilizer: StabilizerSet
    correction: PauliVec
    k_out: int

    def to_lines(self) -> list[str]:
        lines = [
            json.dumps({"op": render(op), "outcome": outcome})
            for op, outcome in self.history.entries
        ]
        lines.append(
            json.dumps({"correction": render(self.correction), "k_out": self.k_out})
        )
        return lines

    def to_text(self) -> str:
        return "\n".join(self.to_lines()) + "\n"


@dataclass(frozen=True)
class Counterexample:
    hidden: PauliVec
    transcript: Optional[Transcript]
    reason: str


@dataclass(frozen=True)
class Report:
    """Aggregate exhaustive-verification result."""

    errors_checked: int
    k_min: int
    passed: bool
    counterexamples: tuple[Counterexample, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "errors_checked": self.errors_checked,
            "k_min": self.k_min,
            "pass": self.passed,
            "counterexamples": [
                {
                    "error": render(c.hidden),
                    "reason": c.reason,
                    "transcript": (
                        [json.loads(line) for line in c.transcript.to_lines()]
                        if c.transcript is not None
                        else None
                    ),
                }
                for c in self.counterexamples
            ],
        }

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def generic_correction(
    s: StabilizerSet, history: History, t: int, d: int
) -> PauliVec:
    """Correction consistent with every recorded outcome.

    Filters the weight-bounded error list through each (operator, outcome)
    pair; all survivors must fall in one coset of the stabilizer, and the
    minimum-weight survivor (canonical key breaking ties) is returned.
    Degenerate survivors are fine: errors in a common coset act identically,
    so correcting any representative restores the state.
    """
    survivors = errorspace.base_errors(d, s.n, t)
    for op, outcome in history.entries:
        survivors = filter_by_outcome(survivors, op, outcome)
    if not survivors.members:
        raise EmptyCandidates(
            f"no error of weight <= {t} matches the recorded outcomes"
        )
    partition = coset_classes(survivors, s)
    if not partition.is_single_class:
        raise UnsoundFinish(
            f"{len(survivors.members)} surviving errors span "
            f"{len(partition.classes)} distinct cosets; finished too early"
        )
    return partition.representatives[0]


def simulate(strategy: Strategy, hidden: PauliVec) -> Transcript:
    """Run one protocol execution against a hidden error."""
    if hidden.d != strategy.d or hidden.n != strategy.n:
        raise ValueError("hidden error does not match the strategy dimensions")
    if weight(hidden) > strategy.t:
        raise ValueError(
            f"hidden error has weight {weight(hidden)} > bound {strategy.t}"
        )
    s = StabilizerSet(strategy.d, strategy.n)
    history = History()
    consultations = 0
    while True:
        consultations += 1
        if consultations > 2 * strategy.n:
            raise NonTerminationError(
                f"strategy exceeded {2 * strategy.n} consultations"
            )
        step = strategy.next(history)
        if isinstance(step, Measure):
            op = step.op
            if not s.in_normalizer(op):
                raise IllegalMeasurement(
                    f"{render(op)} anticommutes with an earlier measurement"
                )
            if s.is_member(op):
                raise RedundantMeasurement(
                    f"{render(op)} is already determined by earlier measurements"
                )
            outcome = symplectic_product(op, hidden)
            history = history.with_entry(op, outcome)
            s = s.extend(op)
        elif isinstance(step, Discard):
            for op in complete_discard(s, step.registers):
                outcome = symplectic_product(op, hidden)
                history = history.with_entry(op, outcome)
                s = s.extend(op)
            history = history.with_discard(step.registers)
        elif isinstance(step, Finish):
            correction = generic_correction(s, history, strategy.t, strategy.d)
            return Transcript(
                history=history,
                final_stabilizer=s,
                correction=correction,
                k_out=s.logical_count(),
            )
        else:
            raise TypeError(f"strategy returned {step!r}, not a Step")


def _check_one(strategy: Strategy, hidden: PauliVec):
    """(k_out, counterexample-or-None) for a single hidden error."""
    try:
        transcript = simulate(strategy, hidden)
    except ProtocolError as exc:
        return None, Counterexample(hidden, None, f"{type(exc).__name__}: {exc}")
    if transcript.k_out < strategy.k_claimed:
        return transcript.k_out, Counterexample(
            hidden,
            transcript,
            f"k_out {transcript.k_out} below claimed {strategy.k_claimed}",
        )
    residual = multiply(inverse(transcript.correction), hidden)
    if not transcript.final_stabilizer.is_member(residual):
        return transcript.k_out, Counterexample(
            hidden, transcript, "correction differs from the hidden error"
        )
    return transcript.k_out, None


def verify(strategy: Strategy, workers: int = 1, cap: int = DEFAULT_CAP) -> Report:
    """Simulate against every error of weight <= t (identity included).

    A run fails on any simulation error, on certifying fewer pairs than
    claimed, or if the correction and the hidden error differ by anything
    outside the final stabilizer.  Counterexamples come out in the
    deterministic enumeration order regardless of worker count.
    """
    errors = errorspace.enumerate_errors(strategy.n, strategy.t, strategy.d, cap)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda e: _check_one(strategy, e), errors.members))
    else:
        results = [_check_one(strategy, e) for e in errors.members]
    k_values = [k for k, _ in results if k is not None]
    counterexamples = tuple(c for _, c in results if c is not None)
    k_min = min(k_values) if k_values else -1
    passed = not counterexamples and k_min >= strategy.k_claimed
    return Report(
        errors_checked=len(errors.members),
        k_min=k_min,
        passed=passed,
        counterexamples=counterexamples,
    )
