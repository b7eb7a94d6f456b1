"""Phased Pauli strings and weighted sums of Pauli strings.

The algebra is exact up to floating-point coefficients: strings multiply
through a per-qubit lookup table, sums merge duplicate strings and drop
coefficients below ``PRUNE_TOL``.

Conventions used throughout the package:

* qubits are numbered 1..n,
* single-qubit kets are ordered |1> = (1,0)^T, |0> = (0,1)^T, so the
  all-zeros reference state is the -1 eigenstate of every sigma_z and
  <0..0| Z_i |0..0> = -1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from numbers import Number
from typing import Iterable, Iterator

import numpy as np

# Coefficients below this magnitude are dropped after every add/multiply.
PRUNE_TOL = 1e-14

MAX_WIDTH = 20


class Axis(IntEnum):
    """Single-qubit Pauli axis, two bits per qubit.

    The codes are chosen so that XOR of two codes is the code of their
    product axis; the scalar phase is tracked separately.
    """

    I = 0
    X = 1
    Y = 2
    Z = 3


_AXIS_NAMES = "IXYZ"

# i**k for k = 0..3
_I_POWERS = np.array([1.0, 1.0j, -1.0, -1.0j])

# _PHASE_EXP[a, b] = k such that sigma_a sigma_b = i**k sigma_(a XOR b)
_PHASE_EXP = np.array(
    [
        [0, 0, 0, 0],
        [0, 0, 1, 3],
        [0, 3, 0, 1],
        [0, 1, 3, 0],
    ],
    dtype=np.int64,
)

_TOKEN_RE = re.compile(r"^([IXYZ])(\d+)$")


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {width}")


def _check_qubit(qubit: int, width: int) -> None:
    if not 1 <= qubit <= width:
        raise ValueError(f"qubit index {qubit} out of range 1..{width}")


@dataclass(frozen=True)
class PauliString:
    """A scalar phase i**phase_power times a tensor product of Pauli axes."""

    width: int
    axes: tuple[int, ...]
    phase_power: int = 0

    def __post_init__(self):
        _check_width(self.width)
        if len(self.axes) != self.width:
            raise ValueError(
                f"axes length {len(self.axes)} does not match width {self.width}"
            )
        if any(a not in (0, 1, 2, 3) for a in self.axes):
            raise ValueError(f"invalid axis code in {self.axes}")
        object.__setattr__(self, "axes", tuple(int(a) for a in self.axes))
        object.__setattr__(self, "phase_power", int(self.phase_power) % 4)

    @classmethod
    def identity(cls, width: int) -> "PauliString":
        return cls(width, (Axis.I,) * width)

    @classmethod
    def single(cls, width: int, qubit: int, axis: Axis) -> "PauliString":
        """Pauli ``axis`` on ``qubit`` (1-based), identity elsewhere."""
        _check_width(width)
        _check_qubit(qubit, width)
        axes = [Axis.I] * width
        axes[qubit - 1] = Axis(axis)
        return cls(width, tuple(axes))

    @classmethod
    def from_ops(cls, width: int, ops: str, phase_power: int = 0) -> "PauliString":
        """Parse tokens like ``"Y2 X3"`` (axis letter + 1-based qubit)."""
        axes = [Axis.I] * width
        for token in ops.split():
            m = _TOKEN_RE.match(token)
            if m is None:
                raise ValueError(f"bad Pauli token {token!r}")
            qubit = int(m.group(2))
            _check_qubit(qubit, width)
            axes[qubit - 1] = Axis[m.group(1)]
        return cls(width, tuple(axes), phase_power)

    @property
    def phase(self) -> complex:
        return complex(_I_POWERS[self.phase_power])

    @property
    def is_hermitian(self) -> bool:
        return self.phase_power % 2 == 0

    def __str__(self) -> str:
        sign = ("+", "+i", "-", "-i")[self.phase_power]
        return f"{sign}{_tokens(self.axes)}"


def multiply_strings(a: PauliString, b: PauliString) -> PauliString:
    """Group product a*b with the accumulated phase."""
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    phase = a.phase_power + b.phase_power
    axes = []
    for ax_a, ax_b in zip(a.axes, b.axes):
        phase += int(_PHASE_EXP[ax_a, ax_b])
        axes.append(ax_a ^ ax_b)
    return PauliString(a.width, tuple(axes), phase % 4)


def _tokens(axes: Iterable[int]) -> str:
    parts = [f"{_AXIS_NAMES[a]}{q}" for q, a in enumerate(axes, start=1) if a != Axis.I]
    return " ".join(parts) if parts else "I"


def _fmt_coeff(c: complex) -> str:
    if abs(c.imag) < 1e-12:
        return f"{c.real:+.6f}"
    return f"({c.real:+.6f}{c.imag:+.6f}j)"


def _encode(axes: np.ndarray, width: int) -> np.ndarray:
    """Pack axis codes into one integer key per string (qubit 1 is the
    most significant pair of bits), giving the canonical term order."""
    shifts = 2 * (width - 1 - np.arange(width, dtype=np.int64))
    return (axes.astype(np.int64) << shifts).sum(axis=1)


def _merge(width: int, axes: np.ndarray, coeffs: np.ndarray):
    """Merge duplicate strings, prune tiny coefficients, sort canonically."""
    if len(coeffs) == 0:
        return axes.reshape(0, width).astype(np.uint8), coeffs.astype(complex)
    keys = _encode(axes, width)
    uniq, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    acc = np.zeros(len(uniq), dtype=complex)
    np.add.at(acc, inverse, coeffs)
    keep = np.abs(acc) >= PRUNE_TOL
    return axes[first[keep]].astype(np.uint8), acc[keep]


# Pair-product chunking bound: keeps the intermediate broadcast arrays small.
_PAIR_CHUNK = 1 << 20


class OperatorSum:
    """A finite weighted sum of phase-free Pauli strings of equal width.

    Terms are stored merged (no duplicate strings), pruned at
    ``PRUNE_TOL`` and canonically ordered, so equal operators have
    identical term arrays.  Instances are immutable; all arithmetic
    returns new values.
    """

    __slots__ = ("_width", "_axes", "_coeffs")

    def __init__(self, width: int, terms: Iterable[tuple[PauliString | str, complex]] = ()):
        _check_width(width)
        axes_rows = []
        coeffs = []
        for string, coeff in terms:
            if isinstance(string, str):
                string = PauliString.from_ops(width, string)
            if string.width != width:
                raise ValueError(f"width mismatch: {string.width} != {width}")
            axes_rows.append(string.axes)
            coeffs.append(complex(coeff) * string.phase)
        axes = np.array(axes_rows, dtype=np.uint8).reshape(len(axes_rows), width)
        merged_axes, merged_coeffs = _merge(width, axes, np.array(coeffs, dtype=complex))
        self._init_raw(width, merged_axes, merged_coeffs)

    def _init_raw(self, width: int, axes: np.ndarray, coeffs: np.ndarray) -> None:
        axes = np.ascontiguousarray(axes, dtype=np.uint8)
        coeffs = np.ascontiguousarray(coeffs, dtype=complex)
        axes.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "_width", width)
        object.__setattr__(self, "_axes", axes)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorSum is immutable")

    @classmethod
    def _raw(cls, width: int, axes: np.ndarray, coeffs: np.ndarray) -> "OperatorSum":
        """Internal: wrap already-merged canonical arrays."""
        out = cls.__new__(cls)
        out._init_raw(width, axes, coeffs)
        return out

    @classmethod
    def zero(cls, width: int) -> "OperatorSum":
        return cls(width)

    @classmethod
    def identity(cls, width: int) -> "OperatorSum":
        return cls(width, [(PauliString.identity(width), 1.0)])

    @classmethod
    def single_axis(cls, width: int, qubit: int, axis: Axis, coeff: complex = 1.0) -> "OperatorSum":
        return cls(width, [(PauliString.single(width, qubit, axis), coeff)])

    @property
    def width(self) -> int:
        return self._width

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    def iter_terms(self) -> Iterator[tuple[PauliString, complex]]:
        """Yield (phase-free string, coefficient) in canonical order."""
        for row, coeff in zip(self._axes, self._coeffs):
            yield PauliString(self._width, tuple(int(a) for a in row)), complex(coeff)

    def coefficient(self, string: PauliString | str) -> complex:
        """Coefficient of ``string`` (0 if absent); phases are divided out."""
        if isinstance(string, str):
            string = PauliString.from_ops(self._width, string)
        if string.width != self._width:
            raise ValueError(f"width mismatch: {string.width} != {self._width}")
        key = _encode(np.array([string.axes], dtype=np.uint8), self._width)[0]
        keys = _encode(self._axes, self._width)
        pos = np.searchsorted(keys, key)
        if pos < len(keys) and keys[pos] == key:
            return complex(self._coeffs[pos] / string.phase)
        return 0.0 + 0.0j

    def support(self) -> frozenset[int]:
        """Qubits (1-based) on which any term acts non-trivially."""
        if self.is_zero:
            return frozenset()
        mask = (self._axes != Axis.I).any(axis=0)
        return frozenset(int(q) + 1 for q in np.nonzero(mask)[0])

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        if self.is_zero:
            return True
        return float(np.abs(self._coeffs.imag).max()) <= atol

    def __add__(self, other: "OperatorSum") -> "OperatorSum":
        if not isinstance(other, OperatorSum):
            return NotImplemented
        if other._width != self._width:
            raise ValueError(f"width mismatch: {self._width} != {other._width}")
        axes = np.concatenate([self._axes, other._axes], axis=0)
        coeffs = np.concatenate([self._coeffs, other._coeffs])
        return OperatorSum._raw(self._width, *_merge(self._width, axes, coeffs))

    def __sub__(self, other: "OperatorSum") -> "OperatorSum":
        return self + (-other)

    def __neg__(self) -> "OperatorSum":
        return OperatorSum._raw(self._width, self._axes, -self._coeffs)

    def __mul__(self, other):
        if isinstance(other, OperatorSum):
            return _sum_multiply(self, other)
        if isinstance(other, Number):
            c = complex(other)
            if abs(c) < PRUNE_TOL:
                return OperatorSum.zero(self._width)
            return OperatorSum._raw(self._width, self._axes, self._coeffs * c)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self.__mul__(other)
        return NotImplemented

    def equal_terms(self, other: "OperatorSum") -> bool:
        """Exact termwise equality (same strings, bitwise-equal coefficients)."""
        return (
            self._width == other._width
            and np.array_equal(self._axes, other._axes)
            and np.array_equal(self._coeffs, other._coeffs)
        )

    def render(self) -> str:
        """Canonical text form, one term per line: sign, coefficient with
        six decimals, axis-qubit tokens in ascending qubit order."""
        if self.is_zero:
            return "0"
        lines = [
            f"{_fmt_coeff(coeff)} * {_tokens(row)}"
            for row, coeff in zip(self._axes, self._coeffs)
        ]
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"OperatorSum(width={self._width}, terms={len(self)})"


def _sum_multiply(a: OperatorSum, b: OperatorSum) -> OperatorSum:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    width = a.width
    ma, mb = len(a), len(b)
    if ma == 0 or mb == 0:
        return OperatorSum.zero(width)

    chunk = max(1, _PAIR_CHUNK // mb)
    partial_axes = []
    partial_coeffs = []
    for start in range(0, ma, chunk):
        rows_a = a._axes[start : start + chunk]
        coeffs_a = a._coeffs[start : start + chunk]
        axes = (rows_a[:, None, :] ^ b._axes[None, :, :]).reshape(-1, width)
        exponents = _PHASE_EXP[rows_a[:, None, :], b._axes[None, :, :]].sum(axis=2) % 4
        coeffs = (coeffs_a[:, None] * b._coeffs[None, :]) * _I_POWERS[exponents]
        m_axes, m_coeffs = _merge(width, axes, coeffs.reshape(-1))
        partial_axes.append(m_axes)
        partial_coeffs.append(m_coeffs)
    if len(partial_axes) == 1:
        return OperatorSum._raw(width, partial_axes[0], partial_coeffs[0])
    axes = np.concatenate(partial_axes, axis=0)
    coeffs = np.concatenate(partial_coeffs)
    return OperatorSum._raw(width, *_merge(width, axes, coeffs))


def expectation_in_all_zeros(op: OperatorSum) -> complex:
    """<0..0| op |0..0>.

    Off-diagonal axes (X, Y) kill a term; each Z contributes -1 because
    |0> is the -1 eigenstate of sigma_z in the |1>-first ket ordering.
    """
    if op.is_zero:
        return 0.0 + 0.0j
    has_xy = ((op._axes == Axis.X) | (op._axes == Axis.Y)).any(axis=1)
    z_parity = (op._axes == Axis.Z).sum(axis=1) % 2
    signs = np.where(has_xy, 0.0, np.where(z_parity == 1, -1.0, 1.0))
    return complex((op._coeffs * signs).sum())


def isclose(a: OperatorSum, b: OperatorSum, atol: float = 1e-10) -> bool:
    """Termwise comparison; strings missing on one side count as 0."""
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    return max_term_deviation(a, b) <= atol


def max_term_deviation(a: OperatorSum, b: OperatorSum) -> float:
    """Largest coefficient difference over the union of term strings."""
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")
    diff = a - b
    if diff.is_zero:
        return 0.0
    return float(np.abs(diff._coeffs).max())
