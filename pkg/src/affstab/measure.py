"""Weak (sampling) and strong (exact probability) measurement simulation.

Computational-basis measurement of a subset S of qubits on an affine
form.  Probabilities are exact dyadics (0 or a power of 1/2) computed
with no floating point; sampling draws the m free parameters uniformly
and reads the measured bits off the ket map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .affine import AffineForm
from .errors import CapacityError


@dataclass(frozen=True)
class DyadicProb:
    """Probability 0 or exactly 2^(-gamma)."""

    zero: bool
    gamma: int | None = None

    @staticmethod
    def impossible() -> "DyadicProb":
        return DyadicProb(True, None)

    @staticmethod
    def power(gamma: int) -> "DyadicProb":
        return DyadicProb(False, gamma)

    def as_fraction(self) -> Fraction:
        return Fraction(0) if self.zero else Fraction(1, 2 ** self.gamma)

    def as_float(self) -> float:
        return 0.0 if self.zero else 2.0 ** (-self.gamma)

    def __str__(self) -> str:
        if self.zero:
            return "0"
        return "1" if self.gamma == 0 else f"2^-{self.gamma}"


@dataclass(frozen=True)
class Outcome:
    """Measured qubit indices and the observed bits, in matching order."""

    qubits: tuple[int, ...]
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def _subset(s: AffineForm, subset) -> tuple[np.ndarray, np.ndarray]:
    subset = list(subset)
    if len(set(subset)) != len(subset):
        raise ValueError("measured qubits must be distinct")
    for q in subset:
        if not 0 <= q < s.n:
            raise ValueError(f"qubit {q} out of range")
    return s.R[subset, :], s.t[subset]


def strong_prob(s: AffineForm, subset, alpha) -> DyadicProb:
    """Exact probability that measuring ``subset`` yields bits ``alpha``.

    Phases never enter: the count of parameter assignments hitting
    alpha is 2^(m - rank) out of 2^m, or zero if the restricted system
    is inconsistent.
    """
    r_s, t_s = _subset(s, subset)
    alpha = gf2.bits(alpha)
    if alpha.shape != (r_s.shape[0],):
        raise ValueError("outcome length does not match subset size")
    sol = gf2.solve_affine(r_s, alpha ^ t_s)
    if not sol.consistent:
        return DyadicProb.impossible()
    return DyadicProb.power(gf2.rank(r_s))


def weak_sample_many(s: AffineForm, subset, shots: int,
                     rng: np.random.Generator) -> np.ndarray:
    """Draw ``shots`` independent outcomes; returns a (shots, |S|) bit array.

    Each shot consumes exactly m fair bits from ``rng``.
    """
    r_s, t_s = _subset(s, subset)
    us = rng.integers(0, 2, size=(shots, s.m), dtype=np.uint8)
    return (us @ r_s.T % 2) ^ t_s


def weak_sample(s: AffineForm, subset, rng: np.random.Generator) -> Outcome:
    """Sample one measurement outcome with the exact distribution."""
    bits = weak_sample_many(s, subset, 1, rng)[0]
    return Outcome(tuple(subset), tuple(int(b) for b in bits))


def enumerate_support(s: AffineForm, subset, cap: int) -> list[tuple[Outcome, DyadicProb]]:
    """All outcomes with nonzero probability, with exact probabilities.

    There are 2^rank(R_S) of them, each of probability 2^(-rank); the
    list is sorted by bit pattern and its probabilities sum to 1
    exactly.

    Raises:
        CapacityError: if the support exceeds ``cap`` outcomes.
    """
    r_s, t_s = _subset(s, subset)
    subset = tuple(subset)
    # Basis of the column space: independent rows of R_S^T.
    rref, pivots = gf2.row_echelon(r_s.T)
    basis = rref[: len(pivots), :]
    rank = len(pivots)
    if 2 ** rank > cap:
        raise CapacityError(
            f"support has {2 ** rank} outcomes, which exceeds the cap {cap}")
    prob = DyadicProb.power(rank)
    out = []
    for code in range(2 ** rank):
        bits = t_s.copy()
        for i in range(rank):
            if (code >> i) & 1:
                bits = bits ^ basis[i]
        out.append((Outcome(subset, tuple(int(b) for b in bits)), prob))
    out.sort(key=lambda pair: pair[0].bits)
    return out
