"""Mixed-dimension circuit IR: wires of dimension 2..4, gates, metrics, passes.

A circuit is an ordered gate list over a wire table. Three gate kinds exist:

* single-wire unitaries (H, X, Z, RY, S, SDG) acting on levels {0, 1} of their
  target and as identity on levels 2 and 3, optionally controlled;
* modular increments |y> -> |(y + delta) mod m> on levels below the modulus,
  optionally controlled -- these are the generalized-CNOT family that raises
  and restores intermediate qudit levels;
* abstract multi-controlled Toffolis (MCT), placeholders that a lowering pass
  replaces before simulation.

Every control is a (wire, trigger value) pair: the gate acts only on the
slice of the state where each control wire holds its trigger value.

Circuits are built by appending (validated) gates and treated as immutable
once handed off; metric and pass functions never mutate their input.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

SINGLE_GATE_NAMES = ("H", "X", "Z", "RY", "S", "SDG")
_SELF_INVERSE = {"H", "X", "Z"}
_NAME_INVERSE = {"S": "SDG", "SDG": "S"}

KIND_UNITARY = "u"
KIND_INCREMENT = "inc"
KIND_MCT = "mct"


class CircuitError(ValueError):
    """Raised for structurally invalid gates or circuits."""


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    name: str = ""       # single-wire unitaries only
    angle: float = 0.0   # RY only, radians
    delta: int = 0       # increments only
    modulus: int = 0     # increments only

    def wires(self) -> tuple[int, ...]:
        return (self.target,) + tuple(w for w, _ in self.controls)

    def inverse(self) -> "Gate":
        if self.kind == KIND_INCREMENT:
            return replace(self, delta=-self.delta)
        if self.kind == KIND_UNITARY:
            if self.name in _SELF_INVERSE:
                return self
            if self.name == "RY":
                return replace(self, angle=-self.angle)
            return replace(self, name=_NAME_INVERSE[self.name])
        return self  # MCT is self-inverse

    def is_mutual_inverse_of(self, other: "Gate") -> bool:
        """True iff self; other composes to the identity on the same wires."""
        if (self.kind, self.target, self.controls) != (other.kind, other.target, other.controls):
            return False
        if self.kind == KIND_INCREMENT:
            return self.modulus == other.modulus and (self.delta + other.delta) % self.modulus == 0
        if self.kind == KIND_UNITARY:
            if self.name != other.name:
                return {self.name, other.name} == {"S", "SDG"}
            if self.name == "RY":
                return abs(self.angle + other.angle) < 1e-15
            return self.name in _SELF_INVERSE
        return True


def unitary_gate(name: str, target: int, controls=(), angle: float = 0.0) -> Gate:
    if name not in SINGLE_GATE_NAMES:
        raise CircuitError(f"unknown single-wire gate {name!r}")
    return Gate(KIND_UNITARY, target, tuple(controls), name=name, angle=angle)


def increment_gate(target: int, delta: int, modulus: int, controls=()) -> Gate:
    if modulus < 2:
        raise CircuitError(f"increment modulus must be >= 2, got {modulus}")
    return Gate(KIND_INCREMENT, target, tuple(controls), delta=delta, modulus=modulus)


def mct_gate(target: int, controls) -> Gate:
    ctrls = tuple(controls)
    if not ctrls:
        raise CircuitError("MCT needs at least one control; use a bare X instead")
    return Gate(KIND_MCT, target, ctrls)


@dataclass
class WireTable:
    """Per-wire dimensions (2..4) with optional role labels."""

    dims: list[int]
    labels: list[str] | None = None

    def __post_init__(self):
        if not self.dims:
            raise CircuitError("wire table must be nonempty")
        for d in self.dims:
            if d not in (2, 3, 4):
                raise CircuitError(f"wire dimension must be 2, 3 or 4, got {d}")
        if self.labels is not None and len(self.labels) != len(self.dims):
            raise CircuitError("labels length must match dims length")

    def __len__(self) -> int:
        return len(self.dims)


class Circuit:
    """Ordered gate list over a wire table."""

    def __init__(self, dims, labels=None, gates=()):
        self.wires = WireTable(list(dims), list(labels) if labels is not None else None)
        self.gates: list[Gate] = []
        for g in gates:
            self.append(g)

    @property
    def dims(self) -> list[int]:
        return self.wires.dims

    @property
    def n_wires(self) -> int:
        return len(self.wires)

    def _validate(self, g: Gate):
        dims = self.wires.dims
        seen = set()
        for w in g.wires():
            if not (0 <= w < len(dims)):
                raise CircuitError(f"wire {w} out of range")
            if w in seen:
                raise CircuitError(f"wire {w} used twice in one gate")
            seen.add(w)
        for w, v in g.controls:
            if not (0 <= v < dims[w]):
                raise CircuitError(f"trigger value {v} >= dimension {dims[w]} of wire {w}")
        if g.kind == KIND_INCREMENT and g.modulus > dims[g.target]:
            raise CircuitError(
                f"increment modulus {g.modulus} exceeds dimension {dims[g.target]} of wire {g.target}"
            )

    def append(self, g: Gate) -> "Circuit":
        self._validate(g)
        self.gates.append(g)
        return self

    def extend(self, gates) -> "Circuit":
        for g in gates:
            self.append(g)
        return self

    # Gate-building conveniences; all return self for chaining.
    def h(self, w, controls=()):
        return self.append(unitary_gate("H", w, controls))

    def x(self, w, controls=()):
        return self.append(unitary_gate("X", w, controls))

    def z(self, w, controls=()):
        return self.append(unitary_gate("Z", w, controls))

    def ry(self, angle, w, controls=()):
        return self.append(unitary_gate("RY", w, controls, angle=angle))

    def inc(self, w, delta, modulus, controls=()):
        return self.append(increment_gate(w, delta, modulus, controls))

    def mct(self, target, controls):
        return self.append(mct_gate(target, controls))

    def has_abstract_gates(self) -> bool:
        return any(g.kind == KIND_MCT for g in self.gates)

    def size(self) -> int:
        """Gate count."""
        return len(self.gates)

    def depth(self) -> int:
        """Greedy left-to-right layering depth.

        A gate joins the earliest layer after the last layer touching any of
        its wires; every gate occupies one layer-unit regardless of arity.
        """
        last = [0] * self.n_wires
        depth = 0
        for g in self.gates:
            layer = 1 + max(last[w] for w in g.wires())
            for w in g.wires():
                last[w] = layer
            depth = max(depth, layer)
        return depth

    def inverse(self) -> "Circuit":
        """Reversed circuit with each gate inverted; undoes this circuit."""
        return Circuit(self.dims, self.wires.labels,
                       [g.inverse() for g in reversed(self.gates)])

    def copy(self) -> "Circuit":
        return Circuit(self.dims, self.wires.labels, self.gates)

    def __eq__(self, other):
        return (isinstance(other, Circuit) and self.dims == other.dims
                and self.gates == other.gates)

    def __repr__(self):
        return f"Circuit(dims={self.dims}, gates={len(self.gates)})"


def cancel_adjacent_inverses(c: Circuit) -> Circuit:
    """Remove pairs of mutually-inverse gates with no intervening overlap.

    A pair cancels when the two gates share an identical (target, controls)
    signature, compose to the identity, and no gate between them touches any
    of their wires. Runs to a fixpoint.
    """
    gates = list(c.gates)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(gates):
            g = gates[i]
            gw = set(g.wires())
            for j in range(i + 1, len(gates)):
                if gw.isdisjoint(gates[j].wires()):
                    continue
                if g.is_mutual_inverse_of(gates[j]):
                    del gates[j]
                    del gates[i]
                    changed = True
                    i = max(i - 1, 0)
                else:
                    i += 1
                break
            else:
                i += 1
    return Circuit(c.dims, c.wires.labels, gates)


def gate_to_text(g: Gate) -> str:
    if g.kind == KIND_UNITARY:
        head = g.name if g.name != "RY" else f"RY {g.angle:.12g}"
    elif g.kind == KIND_INCREMENT:
        head = f"INC {g.delta:+d} mod {g.modulus}"
    else:
        head = "MCT"
    text = f"{head} @{g.target}"
    if g.controls:
        text += " | ctrl " + " ".join(f"({w},{v})" for w, v in g.controls)
    return text


def circuit_to_text(c: Circuit) -> str:
    """Line-oriented serialization: one gate per line."""
    return "\n".join(gate_to_text(g) for g in c.gates)
