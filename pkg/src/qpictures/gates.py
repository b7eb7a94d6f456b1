"""Gate catalog in the |1>-first basis ordering.

Matrices are written over the kets ordered |1> = (1,0)^T, |0> = (0,1)^T;
for two-qubit gates the first listed qubit is the slow tensor slot, so
the four-dimensional basis runs |1,1>, |1,0>, |0,1>, |0,0>.

The controlled-not is specified target-first: ``cnot(target, control)``
toggles the target ket when the control ket is |1>.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import Axis

UNITARY_ATOL = 1e-12

PAULI_MATRIX = {
    Axis.I: np.eye(2, dtype=complex),
    Axis.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Axis.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    Axis.Z: np.array([[1, 0], [0, -1]], dtype=complex),
}

H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)

# Basis |target, control|: swaps |1,1> <-> |0,1>, fixes the control-|0> block.
CN_MATRIX = np.array(
    [
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)

for _m in (*PAULI_MATRIX.values(), H_MATRIX, CN_MATRIX):
    _m.setflags(write=False)


def rotation_matrix(angle: float) -> np.ndarray:
    """Analyzer rotation exp(+i*angle*sigma_x/2).

    Its conjugation image sends sigma_z to cos(angle)*sigma_z -
    sin(angle)*sigma_y, which is the basis change both measurement arms
    apply before their record CNOTs.
    """
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    """A named unitary acting on an ordered tuple of 1-based qubits."""

    name: str
    qubits: tuple[int, ...]
    matrix: np.ndarray
    params: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"gate qubits must be distinct, got {self.qubits}")
        if any(q < 1 for q in self.qubits):
            raise ValueError(f"qubit indices are 1-based, got {self.qubits}")
        dim = 2 ** len(self.qubits)
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not fit {len(self.qubits)} qubit(s)")
        if not np.allclose(m.conj().T @ m, np.eye(dim), atol=UNITARY_ATOL):
            raise ValueError(f"gate {self.name!r} matrix is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

    @property
    def arity(self) -> int:
        return len(self.qubits)

    def __repr__(self) -> str:
        args = ", ".join(str(q) for q in self.qubits)
        if self.params:
            args += ", " + ", ".join(f"{p:.6g}" for p in self.params)
        return f"{self.name}({args})"


def hadamard(qubit: int) -> Gate:
    return Gate("H", (qubit,), H_MATRIX)


def cnot(target: int, control: int) -> Gate:
    """Controlled-not toggling ``target`` when ``control`` is |1>."""
    return Gate("CN", (target, control), CN_MATRIX)


def pauli_x(qubit: int) -> Gate:
    return Gate("X", (qubit,), PAULI_MATRIX[Axis.X])


def pauli_y(qubit: int) -> Gate:
    return Gate("Y", (qubit,), PAULI_MATRIX[Axis.Y])


def pauli_z(qubit: int) -> Gate:
    return Gate("Z", (qubit,), PAULI_MATRIX[Axis.Z])


def analyzer_rotation(qubit: int, angle: float) -> Gate:
    return Gate("R", (qubit,), rotation_matrix(angle), params=(angle,))


_RANDOM_KINDS = ("H", "X", "Y", "Z", "R", "CN")


def random_circuit(width: int, depth: int, rng: np.random.Generator) -> tuple[Gate, ...]:
    """A reproducible random gate sequence drawn from the catalog."""
    gates = []
    for _ in range(depth):
        kind = _RANDOM_KINDS[int(rng.integers(len(_RANDOM_KINDS)))]
        if kind == "CN" and width < 2:
            kind = "H"
        if kind == "CN":
            target, control = rng.choice(width, size=2, replace=False) + 1
            gates.append(cnot(int(target), int(control)))
        elif kind == "R":
            qubit = int(rng.integers(width)) + 1
            gates.append(analyzer_rotation(qubit, float(rng.uniform(0.0, 2.0 * math.pi))))
        else:
            qubit = int(rng.integers(width)) + 1
            factory = {"H": hadamard, "X": pauli_x, "Y": pauli_y, "Z": pauli_z}[kind]
            gates.append(factory(qubit))
    return tuple(gates)
