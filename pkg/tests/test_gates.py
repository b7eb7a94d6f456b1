"""Gate catalog: matrices, validation, and the random-circuit generator."""
import math

import numpy as np
import pytest

from qpictures import Gate, analyzer_rotation, cnot, hadamard, pauli_x, pauli_y, pauli_z, random_circuit
from qpictures.gates import CN_MATRIX, H_MATRIX, rotation_matrix


def test_hadamard_matrix():
    np.testing.assert_allclose(
        hadamard(1).matrix, np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=0
    )


def test_hadamard_is_involutive():
    np.testing.assert_allclose(H_MATRIX @ H_MATRIX, np.eye(2), atol=1e-15)


def test_cn_matrix_is_the_expected_permutation():
    expected = np.zeros((4, 4))
    expected[0, 2] = expected[2, 0] = expected[1, 1] = expected[3, 3] = 1.0
    assert np.array_equal(CN_MATRIX, expected)


def test_cn_is_involutive():
    np.testing.assert_allclose(CN_MATRIX @ CN_MATRIX, np.eye(4), atol=0)


def test_cnot_stores_target_then_control():
    g = cnot(4, 1)
    assert g.qubits == (4, 1)
    assert g.arity == 2


def test_rotation_at_zero_is_identity():
    np.testing.assert_allclose(rotation_matrix(0.0), np.eye(2), atol=0)


@pytest.mark.parametrize("angle", [0.1, math.pi / 3, 2.0, -1.3])
def test_rotation_is_unitary(angle):
    m = rotation_matrix(angle)
    np.testing.assert_allclose(m.conj().T @ m, np.eye(2), atol=1e-15)


def test_catalog_gates_validate_unitarity():
    for gate in (hadamard(1), pauli_x(1), pauli_y(1), pauli_z(1), cnot(1, 2), analyzer_rotation(1, 0.7)):
        dim = 2**gate.arity
        np.testing.assert_allclose(
            gate.matrix.conj().T @ gate.matrix, np.eye(dim), atol=1e-12
        )


def test_non_unitary_matrix_rejected():
    with pytest.raises(ValueError, match="unitary"):
        Gate("bad", (1,), np.array([[1, 0], [0, 2]], dtype=complex))


def test_duplicate_qubits_rejected():
    with pytest.raises(ValueError, match="distinct"):
        Gate("bad", (2, 2), CN_MATRIX)


def test_zero_based_qubits_rejected():
    with pytest.raises(ValueError, match="1-based"):
        Gate("bad", (0,), H_MATRIX)


def test_matrix_shape_must_match_arity():
    with pytest.raises(ValueError, match="shape"):
        Gate("bad", (1, 2), H_MATRIX)


def test_gate_matrices_are_read_only():
    g = hadamard(1)
    with pytest.raises(ValueError):
        g.matrix[0, 0] = 5.0


def test_random_circuit_is_reproducible():
    a = random_circuit(4, 12, np.random.default_rng(7))
    b = random_circuit(4, 12, np.random.default_rng(7))
    assert [repr(g) for g in a] == [repr(g) for g in b]
    assert len(a) == 12
    assert all(1 <= q <= 4 for g in a for q in g.qubits)


def test_random_circuit_width_one_avoids_two_qubit_gates():
    gates = random_circuit(1, 50, np.random.default_rng(3))
    assert all(g.arity == 1 for g in gates)
