"""Circuit intermediate representation, text format, and classification.

The text format is line oriented (UTF-8, ``#`` starts a comment):

    qubits N                        required, first statement
    prep q a_re a_im b_re b_im      optional, at most once per qubit,
                                    before any gate
    h q | p q | pdg q | x q | z q | cnot c t | cz a b | swap a b
    toffoli c1 c2 t | zrot q num den | czrot a b num den
    measure q1 q2 ...               optional, at most once, last statement
                                    (default: measure 0)

``swap`` is parser sugar and is expanded to three CNOTs at ingestion;
circuits built by this library never contain it.  ``pdg`` (inverse
PHASE) is kept in the IR and expanded to three PHASE gates by the
simulation passes.  Diagonal rotation angles are exact rationals
(num, den) meaning the phase exp(i*pi*num/den) on the all-ones branch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError


class GateKind(enum.Enum):
    H = "h"
    P = "p"
    PDG = "pdg"
    X = "x"
    Z = "z"
    CNOT = "cnot"
    CZ = "cz"
    SWAP = "swap"
    TOFFOLI = "toffoli"
    ZROT = "zrot"
    CZROT = "czrot"


ARITY = {
    GateKind.H: 1,
    GateKind.P: 1,
    GateKind.PDG: 1,
    GateKind.X: 1,
    GateKind.Z: 1,
    GateKind.ZROT: 1,
    GateKind.CNOT: 2,
    GateKind.CZ: 2,
    GateKind.SWAP: 2,
    GateKind.CZROT: 2,
    GateKind.TOFFOLI: 3,
}

ANGLED = {GateKind.ZROT, GateKind.CZROT}

CLIFFORD_KINDS = {
    GateKind.H, GateKind.P, GateKind.PDG, GateKind.CNOT,
    GateKind.X, GateKind.Z, GateKind.CZ, GateKind.SWAP,
}
CLASSICAL_KINDS = {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.SWAP}
DIAGONAL_KINDS = {
    GateKind.P, GateKind.PDG, GateKind.Z, GateKind.CZ,
    GateKind.ZROT, GateKind.CZROT,
}

PREP_NORM_TOL = 1e-12


@dataclass(frozen=True)
class Gate:
    """A single gate: kind, ordered distinct qubit indices, optional angle."""

    kind: GateKind
    qubits: tuple[int, ...]
    angle: tuple[int, int] | None = None

    def __post_init__(self):
        if len(self.qubits) != ARITY[self.kind]:
            raise ValueError(
                f"{self.kind.value} takes {ARITY[self.kind]} qubit(s), "
                f"got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit in {self.kind.value} gate")
        if (self.angle is not None) != (self.kind in ANGLED):
            raise ValueError(f"angle mismatch for {self.kind.value}")
        if self.angle is not None and self.angle[1] <= 0:
            raise ValueError("angle denominator must be positive")


def gate(kind: GateKind, *qubits: int, angle: tuple[int, int] | None = None) -> Gate:
    return Gate(kind, tuple(qubits), angle)


@dataclass(frozen=True)
class Circuit:
    """An n-qubit circuit with optional product-state preparation.

    ``prep`` is either None (all qubits start in |0>) or a tuple of
    per-qubit amplitude pairs (a, b) meaning a|0> + b|1>, each pair
    normalized within 1e-12.  ``measured`` is the default measurement
    subset (distinct indices, in order).
    """

    n_qubits: int
    gates: tuple[Gate, ...] = ()
    prep: tuple[tuple[complex, complex], ...] | None = None
    measured: tuple[int, ...] = (0,)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("circuit must have at least one qubit")
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.n_qubits:
                    raise ValueError(f"qubit index {q} out of range")
        if self.prep is not None:
            if len(self.prep) != self.n_qubits:
                raise ValueError("prep must give one amplitude pair per qubit")
            for a, b in self.prep:
                norm2 = abs(a) ** 2 + abs(b) ** 2
                if abs(norm2 - 1.0) > PREP_NORM_TOL:
                    raise ValueError(
                        f"prep pair not normalized: |a|^2+|b|^2 = {norm2!r}")
        if len(set(self.measured)) != len(self.measured):
            raise ValueError("measured qubits must be distinct")
        for q in self.measured:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"measured qubit {q} out of range")


class CircuitClass(enum.Enum):
    """Which simulation strategy a circuit admits (most specific first)."""

    CLIFFORD_ONLY = "CliffordOnly"
    HT_FORM = "HTForm"
    PRODUCT_FRONT_CLASSICAL_DIAGONAL = "ProductFrontClassicalDiagonal"
    ORACLE_ONLY = "OracleOnly"


def classify(c: Circuit) -> CircuitClass:
    """Route a circuit to the most specific simulation strategy.

    CliffordOnly: no prep, all gates Clifford.
    HTForm: no prep, a prefix of H gates followed by classical gates only.
    ProductFrontClassicalDiagonal: classical + diagonal gates only
    (prep allowed; absent prep is the all-|0> product state).
    OracleOnly: anything else.
    """
    kinds = [g.kind for g in c.gates]
    if c.prep is None and all(k in CLIFFORD_KINDS for k in kinds):
        return CircuitClass.CLIFFORD_ONLY
    if c.prep is None:
        i = 0
        while i < len(kinds) and kinds[i] is GateKind.H:
            i += 1
        if all(k in CLASSICAL_KINDS for k in kinds[i:]):
            return CircuitClass.HT_FORM
    if all(k in CLASSICAL_KINDS or k in DIAGONAL_KINDS for k in kinds):
        return CircuitClass.PRODUCT_FRONT_CLASSICAL_DIAGONAL
    return CircuitClass.ORACLE_ONLY


def expand_swap(g: Gate) -> list[Gate]:
    """Expand SWAP into three CNOTs; other gates pass through."""
    if g.kind is not GateKind.SWAP:
        return [g]
    a, b = g.qubits
    return [gate(GateKind.CNOT, a, b),
            gate(GateKind.CNOT, b, a),
            gate(GateKind.CNOT, a, b)]


def basic_clifford_gates(gates: Iterable[Gate]) -> Iterator[Gate]:
    """Yield gates with SWAP -> 3 CNOTs and PDG -> 3 PHASEs expanded."""
    for g in gates:
        for h in expand_swap(g):
            if h.kind is GateKind.PDG:
                for _ in range(3):
                    yield gate(GateKind.P, h.qubits[0])
            else:
                yield h


# ---------------------------------------------------------------------------
# Text format


def parse(text: str) -> Circuit:
    """Parse the line-oriented circuit format.

    Raises:
        ParseError: with the offending line number, on unknown
        mnemonics, arity mismatches, out-of-range or duplicate
        indices, or a missing header.
    """
    n_qubits = None
    prep_pairs: dict[int, tuple[complex, complex]] = {}
    gates: list[Gate] = []
    measured: tuple[int, ...] | None = None

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        verb, args = tokens[0].lower(), tokens[1:]

        if n_qubits is None:
            if verb != "qubits":
                raise ParseError(ln, "first statement must be 'qubits N'")
            n_qubits = _parse_int(ln, args, "qubits", count=1)[0]
            if n_qubits < 1:
                raise ParseError(ln, "qubit count must be positive")
            continue
        if measured is not None:
            raise ParseError(ln, "no statements allowed after 'measure'")

        if verb == "qubits":
            raise ParseError(ln, "duplicate 'qubits' header")
        elif verb == "prep":
            if gates:
                raise ParseError(ln, "prep must precede all gates")
            if len(args) != 5:
                raise ParseError(ln, "prep takes: qubit a_re a_im b_re b_im")
            q = _parse_int(ln, args[:1], "prep", count=1)[0]
            _check_index(ln, q, n_qubits)
            if q in prep_pairs:
                raise ParseError(ln, f"duplicate prep for qubit {q}")
            try:
                vals = [float(tok) for tok in args[1:]]
            except ValueError:
                raise ParseError(ln, "prep amplitudes must be decimal floats")
            a, b = complex(vals[0], vals[1]), complex(vals[2], vals[3])
            norm2 = abs(a) ** 2 + abs(b) ** 2
            if abs(norm2 - 1.0) > PREP_NORM_TOL:
                raise ParseError(ln, f"prep pair not normalized: {norm2!r}")
            prep_pairs[q] = (a, b)
        elif verb == "measure":
            qubits = _parse_int(ln, args, "measure")
            if not qubits:
                raise ParseError(ln, "measure needs at least one qubit")
            if len(set(qubits)) != len(qubits):
                raise ParseError(ln, "duplicate qubit in measure")
            for q in qubits:
                _check_index(ln, q, n_qubits)
            measured = tuple(qubits)
        else:
            try:
                kind = GateKind(verb)
            except ValueError:
                raise ParseError(ln, f"unknown mnemonic '{verb}'")
            arity = ARITY[kind]
            want = arity + (2 if kind in ANGLED else 0)
            if len(args) != want:
                raise ParseError(ln, f"'{verb}' takes {want} argument(s)")
            nums = _parse_int(ln, args, verb)
            qubits = tuple(nums[:arity])
            for q in qubits:
                _check_index(ln, q, n_qubits)
            if len(set(qubits)) != arity:
                raise ParseError(ln, f"duplicate qubit in '{verb}'")
            angle = None
            if kind in ANGLED:
                num, den = nums[arity], nums[arity + 1]
                if den <= 0:
                    raise ParseError(ln, "angle denominator must be positive")
                angle = (num, den)
            g = Gate(kind, qubits, angle)
            gates.extend(expand_swap(g))

    if n_qubits is None:
        raise ParseError(0, "empty input: missing 'qubits N' header")
    prep = None
    if prep_pairs:
        prep = tuple(prep_pairs.get(q, (complex(1.0), complex(0.0)))
                     for q in range(n_qubits))
    return Circuit(n_qubits, tuple(gates), prep,
                   measured if measured is not None else (0,))


def _parse_int(ln: int, toks: list[str], verb: str, count: int | None = None) -> list[int]:
    if count is not None and len(toks) != count:
        raise ParseError(ln, f"'{verb}' takes {count} argument(s)")
    out = []
    for tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(ln, f"'{verb}': expected integer, got '{tok}'")
    return out


def _check_index(ln: int, q: int, n: int) -> None:
    if not 0 <= q < n:
        raise ParseError(ln, f"qubit index {q} out of range for {n} qubits")


def emit(c: Circuit) -> str:
    """Emit canonical text; parse(emit(c)) == c for swap-free circuits."""
    lines = [f"qubits {c.n_qubits}"]
    if c.prep is not None:
        for q, (a, b) in enumerate(c.prep):
            lines.append(
                f"prep {q} {a.real!r} {a.imag!r} {b.real!r} {b.imag!r}")
    for g in c.gates:
        parts = [g.kind.value] + [str(q) for q in g.qubits]
        if g.angle is not None:
            parts += [str(g.angle[0]), str(g.angle[1])]
        lines.append(" ".join(parts))
    lines.append("measure " + " ".join(str(q) for q in c.measured))
    return "\n".join(lines) + "\n"
