"""Exact state-vector simulation over mixed-radix wire spaces.

The amplitude array is kept shaped with one axis per wire (wire 0 is the most
significant / leftmost ket character, matching the graph display convention).
Controls select a basic-indexing view of the tensor, so gate application is a
vectorized numpy operation on the controlled slice only:

* increments permute the target axis cyclically below their modulus;
* single-wire unitaries apply a dense 2x2 to levels {0, 1} of the target axis.

All arithmetic is double-precision complex. Tolerances used across the
package live here: STATE_ATOL for state/unitary equality, ANCILLA_ATOL for
residual amplitude on supposedly-restored wires.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin, sqrt

import numpy as np

from .ir import (Circuit, Gate, KIND_INCREMENT, KIND_MCT, KIND_UNITARY)

STATE_ATOL = 1e-9
ANCILLA_ATOL = 1e-12
MAX_UNITARY_STATES = 4096
# Largest amplitude array the simulator will allocate (mixed-radix product).
MAX_STATE_SIZE = 1 << 24

_SQRT2_INV = 1.0 / sqrt(2.0)
_FIXED_2X2 = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDG": np.array([[1, 0], [0, -1j]], dtype=complex),
}


class SimulationError(RuntimeError):
    pass


class StateTooLargeError(SimulationError):
    """The mixed-radix amplitude array would exceed MAX_STATE_SIZE."""


def gate_matrix(g: Gate) -> np.ndarray:
    """The 2x2 acting on levels {0, 1} of a single-wire unitary."""
    if g.name == "RY":
        c, s = cos(g.angle / 2.0), sin(g.angle / 2.0)
        return np.array([[c, -s], [s, c]], dtype=complex)
    return _FIXED_2X2[g.name]


@dataclass
class StateVector:
    """Complex amplitudes shaped as one tensor axis per wire."""

    dims: tuple[int, ...]
    amps: np.ndarray

    @property
    def size(self) -> int:
        return self.amps.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def flat(self) -> np.ndarray:
        return self.amps.reshape(-1)

    def amplitude(self, digits) -> complex:
        return complex(self.amps[tuple(digits)])

    def copy(self) -> "StateVector":
        return StateVector(self.dims, self.amps.copy())


def basis_state(dims, digits) -> StateVector:
    dims = tuple(dims)
    digits = tuple(digits)
    if len(digits) != len(dims) or any(not 0 <= x < d for x, d in zip(digits, dims)):
        raise SimulationError(f"basis digits {digits} invalid for dims {dims}")
    amps = np.zeros(dims, dtype=complex)
    amps[digits] = 1.0
    return StateVector(dims, amps)


def index_to_digits(index: int, dims) -> tuple[int, ...]:
    """Mixed-radix decode, wire 0 most significant."""
    digits = []
    for d in reversed(dims):
        digits.append(index % d)
        index //= d
    if index:
        raise SimulationError("basis index out of range")
    return tuple(reversed(digits))


def digits_to_string(digits) -> str:
    return "".join(str(x) for x in digits)


def _control_index(n: int, controls):
    idx = [slice(None)] * n
    for w, v in controls:
        idx[w] = v
    return idx


def _apply_gate(amps: np.ndarray, dims, g: Gate):
    n = len(dims)
    idx = _control_index(n, g.controls)
    if g.kind == KIND_INCREMENT:
        sub = amps[tuple(idx)]
        axis = g.target - sum(1 for w, _ in g.controls if w < g.target)
        d, m = dims[g.target], g.modulus
        src = np.concatenate([(np.arange(m) - g.delta) % m, np.arange(m, d)])
        sub[...] = np.take(sub, src, axis=axis)
    elif g.kind == KIND_UNITARY:
        u = gate_matrix(g)
        idx0, idx1 = list(idx), list(idx)
        idx0[g.target], idx1[g.target] = 0, 1
        idx0, idx1 = tuple(idx0), tuple(idx1)
        a0, a1 = amps[idx0], amps[idx1]
        n0 = u[0, 0] * a0 + u[0, 1] * a1
        n1 = u[1, 0] * a0 + u[1, 1] * a1
        amps[idx0] = n0
        amps[idx1] = n1
    else:
        raise SimulationError("abstract MCT encountered; lower the circuit first")


def run(c: Circuit, initial=None) -> StateVector:
    """Apply the circuit's gates in order to an initial state.

    `initial` may be None (all-zeros basis state), a digit tuple, a flat basis
    index, or a StateVector whose dims match the circuit's.
    """
    dims = tuple(c.dims)
    size = 1
    for d in dims:
        size *= d
    if size > MAX_STATE_SIZE:
        raise StateTooLargeError(f"state size {size} exceeds cap {MAX_STATE_SIZE}")
    if initial is None:
        sv = basis_state(dims, (0,) * len(dims))
    elif isinstance(initial, StateVector):
        if tuple(initial.dims) != dims:
            raise SimulationError(f"state dims {initial.dims} do not match circuit dims {dims}")
        sv = initial.copy()
    elif isinstance(initial, int):
        sv = basis_state(dims, index_to_digits(initial, dims))
    else:
        sv = basis_state(dims, initial)
    for g in c.gates:
        _apply_gate(sv.amps, dims, g)
    return sv


def apply_permutation(c: Circuit, digits) -> tuple[int, ...]:
    """Classically propagate a basis state through a permutation-only circuit.

    Increments, X gates and abstract MCTs map basis states to basis states, so
    truth tables can be checked without touching amplitudes (and without
    lowering). Raises on any amplitude-mixing or phase gate.
    """
    dims = c.dims
    state = list(digits)
    if len(state) != len(dims) or any(not 0 <= x < d for x, d in zip(state, dims)):
        raise SimulationError(f"basis digits {tuple(digits)} invalid for dims {tuple(dims)}")
    for g in c.gates:
        if any(state[w] != v for w, v in g.controls):
            continue
        if g.kind == KIND_INCREMENT:
            if state[g.target] < g.modulus:
                state[g.target] = (state[g.target] + g.delta) % g.modulus
        elif g.kind == KIND_MCT or (g.kind == KIND_UNITARY and g.name == "X"):
            if state[g.target] < 2:
                state[g.target] ^= 1
        else:
            raise SimulationError(f"gate {g.name or g.kind} is not a basis permutation")
    return tuple(state)


def probabilities(sv: StateVector, wires) -> dict[str, float]:
    """Marginal probabilities over a wire subset, keyed by digit string.

    Traced-out wires are summed over; keys follow the order of `wires`.
    """
    wires = list(wires)
    n = len(sv.dims)
    if any(not 0 <= w < n for w in wires) or len(set(wires)) != len(wires):
        raise SimulationError(f"invalid wire subset {wires}")
    p = np.abs(sv.amps) ** 2
    keep = sorted(wires)
    drop = tuple(w for w in range(n) if w not in set(wires))
    if drop:
        p = p.sum(axis=drop)
    p = p.transpose([keep.index(w) for w in wires])
    out = {}
    for digits in np.ndindex(*p.shape):
        out[digits_to_string(digits)] = float(p[digits])
    return out


def sample(sv: StateVector, wires, shots: int, seed: int) -> dict[str, int]:
    """Seeded multinomial measurement histogram over a wire subset."""
    if shots < 1:
        raise SimulationError("shots must be >= 1")
    probs = probabilities(sv, wires)
    keys = list(probs)
    p = np.array([probs[k] for k in keys])
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p)
    return {k: int(c) for k, c in zip(keys, counts) if c}


def unitary_of(c: Circuit) -> np.ndarray:
    """Dense matrix of the circuit; column j is the image of basis state j."""
    dim = 1
    for d in c.dims:
        dim *= d
    if dim > MAX_UNITARY_STATES:
        raise SimulationError(f"unitary extraction capped at {MAX_UNITARY_STATES} states, got {dim}")
    u = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        u[:, j] = run(c, j).flat()
    return u


def states_close(a: np.ndarray, b: np.ndarray, atol: float = STATE_ATOL,
                 up_to_global_phase: bool = False) -> bool:
    a, b = np.asarray(a).reshape(-1), np.asarray(b).reshape(-1)
    if a.shape != b.shape:
        return False
    if up_to_global_phase:
        overlap = np.vdot(a, b)
        if abs(overlap) < atol:
            return bool(np.linalg.norm(a) < atol and np.linalg.norm(b) < atol)
        b = b * (abs(overlap) / overlap)
    return bool(np.max(np.abs(a - b)) <= atol)
