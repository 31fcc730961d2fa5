import numpy as np
import pytest

from affstab import (AffineForm, GateKind, amplitude, apply_gate, apply_h,
                     apply_phase_family, gate, init_zero, parse, run_clifford,
                     sum_out_var, support_size, to_statevector)
from affstab import gf2
from affstab.affine import LinForm, QuadForm, linform_product
from affstab.errors import ClassificationError
from affstab.statevector import equal_up_to_phase, run_statevector
from helpers import random_clifford_circuit

GHZ_TEXT = "qubits 2\nh 0\ncnot 0 1"


def ghz() -> AffineForm:
    return run_clifford(parse(GHZ_TEXT))


def test_init_zero():
    s = init_zero(2)
    assert amplitude(s, [0, 0]) == 1
    for x in ([0, 1], [1, 0], [1, 1]):
        assert amplitude(s, x) == 0
    assert support_size(init_zero(1)) == 0
    s5 = init_zero(5)
    assert s5.m == 0 and not s5.t.any()
    with pytest.raises(ValueError):
        init_zero(0)


def test_linform_product_brute_force():
    rng = np.random.default_rng(4)
    for _ in range(200):
        m = int(rng.integers(0, 6))
        a = LinForm(rng.integers(0, 2, m, dtype=np.uint8), int(rng.integers(0, 2)))
        b = LinForm(rng.integers(0, 2, m, dtype=np.uint8), int(rng.integers(0, 2)))
        prod = linform_product(a, b)
        for code in range(2 ** m):
            u = np.array([(code >> i) & 1 for i in range(m)], dtype=np.uint8)
            assert prod(u) == (a(u) * b(u)) % 2


def test_quadform_compose_brute_force():
    rng = np.random.default_rng(9)
    for _ in range(200):
        m_old = int(rng.integers(0, 5))
        m_new = int(rng.integers(0, 5))
        q = QuadForm(np.triu(rng.integers(0, 2, (m_old, m_old), dtype=np.uint8), 1),
                     rng.integers(0, 2, m_old, dtype=np.uint8),
                     int(rng.integers(0, 2)))
        k = rng.integers(0, 2, (m_old, m_new), dtype=np.uint8)
        shift = rng.integers(0, 2, m_old, dtype=np.uint8)
        comp = q.compose(k, shift)
        for code in range(2 ** m_new):
            s = np.array([(code >> i) & 1 for i in range(m_new)], dtype=np.uint8)
            assert comp(s) == q((k @ s % 2) ^ shift)


def test_phase_gate_on_bell_pair():
    s = apply_phase_family(ghz(), gate(GateKind.P, 0))
    vec = to_statevector(s)
    want = np.zeros(4, dtype=complex)
    want[0b00], want[0b11] = 1, 1j
    assert equal_up_to_phase(want / np.sqrt(2), vec, 1e-12)


def test_cnot_copies_superposition():
    s = apply_h(init_zero(2), 0)
    s = apply_phase_family(s, gate(GateKind.CNOT, 0, 1))
    assert abs(amplitude(s, [0, 0])) > 0 and abs(amplitude(s, [1, 1])) > 0
    assert amplitude(s, [0, 1]) == 0 and amplitude(s, [1, 0]) == 0


def test_z_on_bell_pair_vs_oracle():
    c = parse("qubits 2\nh 0\ncnot 0 1\nz 1")
    assert equal_up_to_phase(run_statevector(c),
                             to_statevector(run_clifford(c)), 1e-9)


def test_apply_h_cases():
    # fresh parameter
    s = apply_h(init_zero(1), 0)
    assert s.m == 1 and s.R.tolist() == [[1]]
    # involution: second H returns to |0> through the constrained case
    s2 = apply_h(s, 0)
    assert s2.m == 0
    assert amplitude(s2, [1]) == 0 and abs(amplitude(s2, [0])) == 1
    # H on half a Bell pair spreads support to the full square
    s3 = apply_h(ghz(), 0)
    assert s3.m == 2
    want = np.array([1, 1, 1, -1], dtype=complex) / 2
    assert equal_up_to_phase(want, to_statevector(s3), 1e-12)


def test_hph_state():
    c = parse("qubits 1\nh 0\np 0\nh 0")
    s = run_clifford(c)
    assert s.m == 1
    want = np.array([1, -1j]) / np.sqrt(2)
    assert equal_up_to_phase(want, to_statevector(s), 1e-12)
    # amplitude ratio is -i regardless of global phase
    a0, a1 = amplitude(s, [0]), amplitude(s, [1])
    assert abs(a1 / a0 - (-1j)) < 1e-12


def _elimination_instance(rng, m_live):
    """Random pre-state whose ket ignores one parameter."""
    total = m_live + 1
    dead = int(rng.integers(0, total))
    live = [i for i in range(total) if i != dead]
    n = max(m_live, 1)
    r = np.zeros((n, total), dtype=np.uint8)
    for row, col in enumerate(live):
        r[row, col] = 1
    lin = LinForm(rng.integers(0, 2, total, dtype=np.uint8),
                  int(rng.integers(0, 2)))
    quad = QuadForm(np.triu(rng.integers(0, 2, (total, total), dtype=np.uint8), 1),
                    rng.integers(0, 2, total, dtype=np.uint8),
                    int(rng.integers(0, 2)))
    return AffineForm(n, r, np.zeros(n, dtype=np.uint8), lin, quad), dead


def _elimination_reference(s: AffineForm, dead: int) -> np.ndarray:
    """Direct two-term sum over the dead parameter, as a statevector."""
    vec = np.zeros(2 ** s.n, dtype=complex)
    powers = 1 << np.arange(s.n - 1, -1, -1)
    for code in range(2 ** s.m):
        u = np.array([(code >> i) & 1 for i in range(s.m)], dtype=np.uint8)
        ket = (s.R @ u % 2) ^ s.t
        vec[int(ket @ powers)] += (1j ** s.l(u)) * ((-1) ** s.q(u))
    return vec


def _annihilates(s: AffineForm, dead: int) -> bool:
    lam = int(s.l.coeffs[dead])
    g_coeffs = (s.q.cross[dead, :] ^ s.q.cross[:, dead])
    g_coeffs = np.delete(g_coeffs, dead)
    return lam == 0 and not g_coeffs.any() and int(s.q.lin[dead]) == 1


def test_sum_out_var_hh_constraint():
    # two Hadamards: the fresh variable is summed out under a constraint
    s = apply_h(apply_h(init_zero(1), 0), 0)
    assert s.m == 0 and abs(amplitude(s, [0])) == 1


def test_sum_out_var_requires_dead_column():
    s = apply_h(init_zero(1), 0)  # R = [[1]]
    with pytest.raises(AssertionError):
        sum_out_var(s, 0)


def test_sum_out_var_annihilation_asserts():
    lin = LinForm(np.zeros(2, dtype=np.uint8), 0)
    quad = QuadForm(np.zeros((2, 2), dtype=np.uint8),
                    np.array([0, 1], dtype=np.uint8), 0)
    r = np.array([[1, 0]], dtype=np.uint8)
    s = AffineForm(1, r, np.zeros(1, dtype=np.uint8), lin, quad)
    with pytest.raises(AssertionError):
        sum_out_var(s, 1)


def test_sum_out_var_random_brute_force():
    rng = np.random.default_rng(31)
    done = 0
    while done < 300:
        s, dead = _elimination_instance(rng, int(rng.integers(0, 6)))
        if _annihilates(s, dead):
            with pytest.raises(AssertionError):
                sum_out_var(s, dead)
            continue
        ref = _elimination_reference(s, dead)
        res = sum_out_var(s, dead)
        assert gf2.rank(res.R) == res.m
        got = to_statevector(res)
        assert equal_up_to_phase(ref / np.linalg.norm(ref), got, 1e-12)
        done += 1


def test_amplitude_examples():
    s = ghz()
    assert amplitude(s, [0, 1]) == 0
    assert amplitude(s, [1, 1]) == pytest.approx(2 ** -0.5)
    assert support_size(s) == 1


def test_run_clifford_requires_clifford():
    c = parse("qubits 3\nh 0\ntoffoli 0 1 2")
    with pytest.raises(ClassificationError):
        run_clifford(c)


def test_apply_phase_family_rejects_other_kinds():
    with pytest.raises(ValueError):
        apply_phase_family(init_zero(1), gate(GateKind.H, 0))


def test_run_clifford_empty_circuit():
    c = parse("qubits 3\nmeasure 0")
    s = run_clifford(c)
    assert s.m == 0 and amplitude(s, [0, 0, 0]) == 1


def test_run_clifford_accepts_all_clifford_kinds():
    c = parse("qubits 2\nh 0\npdg 0\nswap 0 1\ncz 0 1\nx 0\nz 1\np 1\ncnot 1 0")
    assert equal_up_to_phase(run_statevector(c),
                             to_statevector(run_clifford(c)), 1e-9)


def test_random_circuits_match_oracle():
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        c = random_clifford_circuit(rng, n, int(rng.integers(0, 60)))
        assert equal_up_to_phase(run_statevector(c),
                                 to_statevector(run_clifford(c)), 1e-9)


def test_gate_involutions_at_representation_level():
    rng = np.random.default_rng(13)
    reps = {
        GateKind.P: 4, GateKind.H: 2, GateKind.X: 2, GateKind.Z: 2,
        GateKind.CZ: 2, GateKind.CNOT: 2,
    }
    for kind, times in reps.items():
        for _ in range(20):
            n = int(rng.integers(2, 6))
            c = random_clifford_circuit(rng, n, int(rng.integers(0, 25)))
            s = run_clifford(c)
            qubits = tuple(int(q) for q in rng.choice(
                n, size=2 if kind in (GateKind.CZ, GateKind.CNOT) else 1,
                replace=False))
            stepped = s
            for _ in range(times):
                stepped = apply_gate(stepped, gate(kind, *qubits))
            assert equal_up_to_phase(to_statevector(s),
                                     to_statevector(stepped), 1e-12)


def test_nonzero_amplitudes_have_uniform_modulus_and_quarter_phases():
    rng = np.random.default_rng(14)
    for _ in range(40):
        n = int(rng.integers(1, 6))
        c = random_clifford_circuit(rng, n, int(rng.integers(0, 40)))
        s = run_clifford(c)
        vec = to_statevector(s)
        nz = vec[np.abs(vec) > 1e-12]
        assert len(nz) == 2 ** s.m
        assert np.allclose(np.abs(nz), 2 ** (-s.m / 2), atol=1e-12)
        rel = nz / nz[0]
        units = np.array([1, 1j, -1, -1j])
        for r in rel:
            assert np.min(np.abs(units - r)) < 1e-12
