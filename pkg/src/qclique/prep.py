"""Initial-state builders: full Hilbert, W state, and Dicke states.

All three produce circuits over n binary wires whose output amplitudes are
real, non-negative and uniform on their support:

* `hadamard_prep`: uniform over all 2^n basis states (one layer of H).
* `w_state_prep`: amplitude 1/sqrt(n) on each weight-1 state, built from one
  X and a linear cascade of controlled rotations that peels amplitude off a
  moving excitation.
* `dicke_prep`: amplitude 1/sqrt(C(n, k)) on each weight-k state, via the
  inductive split-and-cyclic-shift construction: seed the k trailing wires
  with |1>, then apply staircases of two- and three-wire blocks whose
  rotation angles transfer exactly the right amplitude between neighbouring
  weight distributions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import acos, comb, sqrt

from .ir import Circuit


@dataclass(frozen=True)
class PrepSpec:
    """Which initial state to build, and the search-space size it spans."""

    kind: str  # "hilbert" | "w" | "dicke"
    n: int
    k: int | None = None

    @property
    def search_space_size(self) -> int:
        if self.kind == "hilbert":
            return 2 ** self.n
        if self.kind == "w":
            return self.n
        if self.kind == "dicke":
            return comb(self.n, self.k)
        raise ValueError(f"unknown prep kind {self.kind!r}")


def hadamard_prep(n: int) -> Circuit:
    """One H per wire: the uniform superposition, depth 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = Circuit([2] * n)
    for w in range(n):
        c.h(w)
    return c


def w_state_prep(n: int) -> Circuit:
    """Uniform superposition of the n weight-1 basis states.

    Starts from |10...0> and repeatedly splits the excitation: at step i a
    controlled RY with angle 2*arccos(sqrt(1/(n-i+1))) leaves 1/sqrt(n) of
    the amplitude behind and a CNOT moves the remainder one wire down.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    c = Circuit([2] * n)
    c.x(0)
    for i in range(1, n):
        theta = 2.0 * acos(sqrt(1.0 / (n - i + 1)))
        c.ry(theta, i, ((i - 1, 1),))
        c.x(i - 1, ((i, 1),))
    return c


def _ccry(c: Circuit, theta: float, c1: int, c2: int, target: int):
    # Doubly-controlled RY via the standard two-CNOT angle-splitting identity.
    c.ry(theta / 2.0, target, ((c2, 1),))
    c.x(c2, ((c1, 1),))
    c.ry(-theta / 2.0, target, ((c2, 1),))
    c.x(c2, ((c1, 1),))
    c.ry(theta / 2.0, target, ((c1, 1),))


def _split_shift_block(c: Circuit, wires: list[int], weight: int, level: int):
    """One staircase block: redistributes amplitude on `weight`+1 wires.

    The two-wire head handles the lowest transfer; each three-wire follower
    moves amplitude for one higher occupation count. Angles arccos(sqrt(l /
    level)) implement the exact binomial ratios of neighbouring supports.
    """
    k = weight
    w_last = wires[k]
    # Two-wire piece.
    c.x(w_last, ((wires[k - 1], 1),))
    c.ry(2.0 * acos(sqrt(1.0 / level)), wires[k - 1], ((w_last, 1),))
    c.x(w_last, ((wires[k - 1], 1),))
    # Three-wire pieces.
    for l in range(2, k + 1):
        theta = 2.0 * acos(sqrt(l / level))
        c.x(w_last, ((wires[k - l], 1),))
        _ccry(c, theta, w_last, wires[k - l + 1], wires[k - l])
        c.x(w_last, ((wires[k - l], 1),))


def dicke_prep(n: int, k: int) -> Circuit:
    """Uniform superposition of all C(n, k) weight-k basis states."""
    if not (1 <= k <= n):
        raise ValueError(f"k={k} out of range for n={n}")
    c = Circuit([2] * n)
    for w in range(n - k, n):
        c.x(w)
    for level in range(n, k, -1):
        first = level - k - 1
        _split_shift_block(c, list(range(first, level)), k, level)
    for level in range(k, 1, -1):
        _split_shift_block(c, list(range(0, level)), level - 1, level)
    return c
