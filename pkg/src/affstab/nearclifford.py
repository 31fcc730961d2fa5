"""Weak simulation of two circuit families outside the Clifford set.

Two families are handled.  HT circuits (a Hadamard layer, then
reversible classical gates) are sampled by drawing the Hadamard bits
uniformly and pushing them through the classical function; their exact
output probabilities are #P-hard in general, so strong simulation is a
capped brute-force count over the 2^m Hadamard assignments.

Product-front circuits (an arbitrary product-state preparation, then
classical and diagonal gates) are sampled the same way with the input
bits drawn from the per-qubit |1>-probabilities; the diagonal gates
contribute only phases and never touch the outcome distribution, so
the sampler ignores them outright.

The front end is pluggable: anything that can produce full-width bit
strings with the right distribution can drive a classical suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import measure
from .affine import AffineForm
from .circuit import (CLASSICAL_KINDS, DIAGONAL_KINDS, Circuit, Gate,
                      GateKind, expand_swap)
from .errors import CapacityError, ClassificationError
from .measure import Outcome
from .statevector import normalized_prep

DEFAULT_WIDTH_LIMIT = 24

# A front end draws (shots, n) bit matrices with its state's
# full-width measurement distribution.
FrontSampler = Callable[[int, np.random.Generator], np.ndarray]


@dataclass(frozen=True)
class ClassicalFunction:
    """An invertible function {0,1}^n -> {0,1}^n as a reversible gate list."""

    n: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        for g in self.gates:
            if g.kind not in (GateKind.X, GateKind.CNOT, GateKind.TOFFOLI):
                raise ValueError(f"not a classical gate: {g.kind.value}")
            for q in g.qubits:
                if not 0 <= q < self.n:
                    raise ValueError(f"qubit {q} out of range")

    @staticmethod
    def from_gates(n: int, gates) -> "ClassicalFunction":
        """Build from a gate list, expanding SWAP and dropping nothing."""
        out = []
        for g in gates:
            out.extend(expand_swap(g))
        return ClassicalFunction(n, tuple(out))


@dataclass(frozen=True)
class CountResult:
    """Exact probability numerator / 2^m from brute-force counting."""

    numerator: int
    m: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 2 ** self.m)

    def as_float(self) -> float:
        return self.numerator / 2 ** self.m


def eval_classical(f: ClassicalFunction, x) -> np.ndarray:
    """Apply the gate list to one bit string."""
    x = np.asarray(x, dtype=np.uint8).copy()
    if x.shape != (f.n,):
        raise ValueError(f"input must have {f.n} bits")
    for g in f.gates:
        _apply_classical(x, g)
    return x


def eval_classical_batch(f: ClassicalFunction, xs: np.ndarray) -> np.ndarray:
    """Apply the gate list to every row of a (shots, n) bit matrix."""
    xs = xs.copy()
    for g in f.gates:
        _apply_classical(xs.T, g)
    return xs


def _apply_classical(cols, g: Gate) -> None:
    # `cols` indexes qubits on its first axis; works for a single
    # string or the transposed batch alike.
    if g.kind is GateKind.X:
        cols[g.qubits[0]] ^= 1
    elif g.kind is GateKind.CNOT:
        c, t = g.qubits
        cols[t] ^= cols[c]
    else:
        c1, c2, t = g.qubits
        cols[t] ^= cols[c1] & cols[c2]


# ---------------------------------------------------------------------------
# Circuit splitting


def _split_ht(c: Circuit) -> tuple[list[int], ClassicalFunction]:
    """Hadamard positions (odd-count prefix qubits) and the classical suffix.

    Checked structurally, so Clifford circuits that happen to be a
    Hadamard prefix plus CNOT/X gates qualify too.
    """
    if c.prep is not None:
        raise ClassificationError("HT circuits take the all-zeros input")
    counts = np.zeros(c.n_qubits, dtype=np.int64)
    i = 0
    while i < len(c.gates) and c.gates[i].kind is GateKind.H:
        counts[c.gates[i].qubits[0]] += 1
        i += 1
    for g in c.gates[i:]:
        if g.kind not in CLASSICAL_KINDS:
            raise ClassificationError(
                "circuit is not in HT form: found "
                f"{g.kind.value} after the Hadamard prefix")
    positions = [int(k) for k in np.nonzero(counts % 2)[0]]
    return positions, ClassicalFunction.from_gates(c.n_qubits, c.gates[i:])


def classical_part(c: Circuit) -> ClassicalFunction:
    """The classical (X/CNOT/TOFFOLI/SWAP) gates of a circuit, as a function."""
    gates = [g for g in c.gates if g.kind in CLASSICAL_KINDS]
    return ClassicalFunction.from_gates(c.n_qubits, gates)


# ---------------------------------------------------------------------------
# Pluggable front ends feeding a classical suffix


def uniform_bits_front(n: int, positions) -> FrontSampler:
    """Uniform bits on the given positions, zero elsewhere."""
    positions = list(positions)

    def draw(shots: int, rng: np.random.Generator) -> np.ndarray:
        xs = np.zeros((shots, n), dtype=np.uint8)
        if positions:
            xs[:, positions] = rng.integers(0, 2, size=(shots, len(positions)),
                                            dtype=np.uint8)
        return xs

    return draw


def product_state_front(pairs) -> FrontSampler:
    """Independent biased bits with P(1) = |b|^2 per qubit.

    Bits are drawn by thresholding one 53-bit uniform variate per
    qubit per shot.
    """
    p_one = np.array([abs(b) ** 2 for _, b in pairs])

    def draw(shots: int, rng: np.random.Generator) -> np.ndarray:
        return (rng.random((shots, len(p_one))) < p_one).astype(np.uint8)

    return draw


def affine_form_front(state: AffineForm) -> FrontSampler:
    """Full-width measurement samples of a stabilizer state."""

    def draw(shots: int, rng: np.random.Generator) -> np.ndarray:
        return measure.weak_sample_many(state, range(state.n), shots, rng)

    return draw


def sample_through_classical(front: FrontSampler, f: ClassicalFunction,
                             subset, shots: int,
                             rng: np.random.Generator) -> np.ndarray:
    """Draw inputs from ``front``, apply ``f``, keep the subset's bits."""
    xs = front(shots, rng)
    return eval_classical_batch(f, xs)[:, list(subset)]


# ---------------------------------------------------------------------------
# HT circuits


def ht_weak_sample(c: Circuit, rng: np.random.Generator) -> Outcome:
    """One sample of the measured qubits, exactly distributed."""
    bits = ht_sample_batch(c, 1, rng)[0]
    return Outcome(tuple(c.measured), tuple(int(b) for b in bits))


def ht_sample_batch(c: Circuit, shots: int,
                    rng: np.random.Generator) -> np.ndarray:
    """(shots, |measured|) outcome bits of an HT circuit."""
    positions, f = _split_ht(c)
    front = uniform_bits_front(c.n_qubits, positions)
    return sample_through_classical(front, f, c.measured, shots, rng)


def ht_strong_count(c: Circuit, subset, alpha,
                    width_limit: int = DEFAULT_WIDTH_LIMIT) -> CountResult:
    """Exact outcome probability of an HT circuit by exhaustive counting.

    Counts the Hadamard assignments whose image matches ``alpha`` on
    ``subset``; the answer is numerator / 2^m with m the Hadamard
    count.  Each qubit's value over all 2^m assignments is held as one
    big integer bit mask, so a gate is one or two word-level ops.

    Raises:
        CapacityError: if m exceeds ``width_limit``; exact
        probabilities for wide Hadamard layers are #P-hard, so the
        wall is enforced rather than crossed.
    """
    positions, f = _split_ht(c)
    m = len(positions)
    if m > width_limit:
        raise CapacityError(
            f"strong HT simulation needs 2^{m} enumerations; "
            f"limit is 2^{width_limit}")
    size = 1 << m
    full = (1 << size) - 1
    # masks[j] holds the broadcast pattern of assignment-bit j.
    values = [0] * c.n_qubits
    for j, q in enumerate(positions):
        block = 1 << (1 << j)
        values[q] = (full // (block + 1)) << (1 << j)
    for g in f.gates:
        if g.kind is GateKind.X:
            values[g.qubits[0]] ^= full
        elif g.kind is GateKind.CNOT:
            cq, t = g.qubits
            values[t] ^= values[cq]
        else:
            c1, c2, t = g.qubits
            values[t] ^= values[c1] & values[c2]
    match = full
    subset = list(subset)
    alpha = [int(b) for b in alpha]
    if len(alpha) != len(subset):
        raise ValueError("outcome length does not match subset size")
    for q, bit in zip(subset, alpha):
        match &= values[q] if bit else values[q] ^ full
    return CountResult(match.bit_count(), m)


# ---------------------------------------------------------------------------
# Product-front circuits


def product_front_sample(c: Circuit, rng: np.random.Generator) -> Outcome:
    """One sample of a product-prep + classical/diagonal circuit.

    Diagonal gates only dress basis states with phases, so they are
    ignored; the classical gates act on bits drawn from the product
    preparation.
    """
    bits = product_front_batch(c, 1, rng)[0]
    return Outcome(tuple(c.measured), tuple(int(b) for b in bits))


def product_front_batch(c: Circuit, shots: int,
                        rng: np.random.Generator) -> np.ndarray:
    """(shots, |measured|) outcome bits of a product-front circuit."""
    for g in c.gates:
        if g.kind not in CLASSICAL_KINDS and g.kind not in DIAGONAL_KINDS:
            raise ClassificationError(
                f"gate {g.kind.value} is neither classical nor diagonal")
    front = product_state_front(normalized_prep(c))
    return sample_through_classical(front, classical_part(c), c.measured,
                                    shots, rng)
