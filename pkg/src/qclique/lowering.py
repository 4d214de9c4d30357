"""Lowering of multi-controlled Toffolis through intermediate qudit levels.

Two ancilla-free passes are provided. Both temporarily raise control wires
above the binary levels and restore them with a mirrored uncompute:

* V-chain: a sequential carry chain through qutrit level 2. An n-control MCT
  becomes exactly 2n-1 two-wire gates with depth 2n-1 and no wire above
  dimension 3.
* Tree: controls are merged pairwise. The first merge of a wire raises its
  "all ones below me" mark from 1 to 2 (qutrit), a second merge raises 2 to 3
  (ququart); a wire is never merged into more than twice, which caps every
  dimension at 4 with zero ancilla. For n <= 7 controls the compute phase
  takes ceil(log2 n) layers, giving total depth 2*ceil(log2 n) + 1. Beyond
  that the dimension cap forces a slightly deeper schedule: compute depth
  T(n) is the least t with g(t) >= n for g(t) = g(t-1) + g(t-2) + 1
  (g = 1, 2, 4, 7, 12, 20, ...), about 1.44*log2(n) asymptotically.

`standard_cost` supplies the qubit-only comparison model: per-arity gate
totals for the conventional 1-/2-qubit-gate decomposition, with a flagged
linear extrapolation above four controls.

Also here: `lower_dary`, the two-control generalization for d-level control
wires (trigger d-1 raises the second control to level d, which then drives
the target increment).
"""
from __future__ import annotations

from dataclasses import dataclass

from .ir import Circuit, Gate, KIND_MCT, CircuitError, increment_gate, unitary_gate


def _check_binary_mct(g: Gate):
    if g.kind != KIND_MCT:
        raise CircuitError("lowering expects an abstract MCT gate")
    if any(v != 1 for _, v in g.controls):
        raise CircuitError("MCT lowering requires all triggers at value 1")


def vchain_gates(control_wires, target: int) -> tuple[list[Gate], set[int]]:
    """Carry-chain gate list for an MCT; returns (gates, wires raised to 3).

    Chain layout for controls [c1..cn]: c2 is bumped 1->2 when c1 is 1; each
    later control is bumped 1->2 when its predecessor sits at 2; the target
    is flipped off the final control's level 2; then the chain is undone in
    reverse. n=1 degenerates to a bare controlled X.
    """
    cs = list(control_wires)
    n = len(cs)
    if n < 1:
        raise CircuitError("MCT lowering needs at least one control")
    if n == 1:
        return [unitary_gate("X", target, ((cs[0], 1),))], set()
    compute = [increment_gate(cs[1], +1, 3, ((cs[0], 1),))]
    for i in range(1, n - 1):
        compute.append(increment_gate(cs[i + 1], +1, 3, ((cs[i], 2),)))
    flip = unitary_gate("X", target, ((cs[-1], 2),))
    uncompute = [g.inverse() for g in reversed(compute)]
    return compute + [flip] + uncompute, set(cs[1:])


def lower_vchain(mct: Gate) -> Circuit:
    """Lower one binary MCT to a standalone V-chain fragment circuit."""
    _check_binary_mct(mct)
    gates, raised = vchain_gates([w for w, _ in mct.controls], mct.target)
    dims = [2] * (max(mct.wires()) + 1)
    for w in raised:
        dims[w] = 3
    return Circuit(dims, gates=gates)


# Tree capacity series: most leaves mergeable into one root within t layers.
def _tree_capacity(t: int) -> int:
    if t <= 0:
        return 1
    a, b = 1, 2  # g(0), g(1)
    for _ in range(t - 1):
        a, b = b, b + a + 1
    return b


def tree_compute_depth(n_controls: int) -> int:
    """Compute-phase layer count T(n); total fragment depth is 2*T(n) + 1."""
    t = 0
    while _tree_capacity(t) < n_controls:
        t += 1
    return t


def _tree_build(ws: list[int], t: int, marks: dict[int, int]) -> tuple[int, list[Gate]]:
    """Merge wires ws into one root within t layers; returns (root, gates).

    marks[w] tracks the level encoding w's accumulated conjunction. A merge
    raises the target's mark by one: 1->2 uses a mod-3 bump, 2->3 a mod-4
    bump, each triggered on the control root's own mark.
    """
    if len(ws) == 1:
        marks[ws[0]] = 1
        return ws[0], []
    if len(ws) <= 1 + _tree_capacity(t - 1):
        # Root ends at mark 2: one trailing merge of everything-but-last.
        ctrl, gates = _tree_build(ws[:-1], t - 1, marks)
        root = ws[-1]
        gates = gates + [increment_gate(root, +1, 3, ((ctrl, marks[ctrl]),))]
        marks[root] = 2
        return root, gates
    # Root ends at mark 3: a mark-2 block absorbs an any-mark block.
    head = 1 + _tree_capacity(t - 2)
    root, gates_a = _tree_build(ws[:head], t - 1, marks)
    ctrl, gates_b = _tree_build(ws[head:], t - 1, marks)
    gates = gates_a + gates_b + [increment_gate(root, +1, 4, ((ctrl, marks[ctrl]),))]
    marks[root] = 3
    return root, gates


def tree_gates(control_wires, target: int) -> tuple[list[Gate], dict[int, int]]:
    """Binary-tree gate list for an MCT; returns (gates, raised wire dims)."""
    cs = list(control_wires)
    if len(cs) < 1:
        raise CircuitError("MCT lowering needs at least one control")
    if len(cs) == 1:
        return [unitary_gate("X", target, ((cs[0], 1),))], {}
    marks: dict[int, int] = {}
    root, compute = _tree_build(cs, tree_compute_depth(len(cs)), marks)
    flip = unitary_gate("X", target, ((root, marks[root]),))
    gates = compute + [flip] + [g.inverse() for g in reversed(compute)]
    dims = {g.target: max(3, g.modulus) for g in compute}
    return gates, dims


def lower_tree(mct: Gate) -> Circuit:
    """Lower one binary MCT to a standalone log-depth tree fragment circuit."""
    _check_binary_mct(mct)
    if len(mct.controls) < 2:
        raise CircuitError("tree lowering applies to MCTs with >= 2 controls")
    gates, raised = tree_gates([w for w, _ in mct.controls], mct.target)
    dims = [2] * (max(mct.wires()) + 1)
    for w, d in raised.items():
        dims[w] = max(dims[w], d)
    return Circuit(dims, gates=gates)


def lower_dary(d: int, c1: int = 0, c2: int = 1, target: int = 2) -> Circuit:
    """Two-control generalized Toffoli over dimension-d wires.

    Trigger d-1 on the first control bumps the second control to level d
    (mod d+1); level d on the second control then drives the target's mod-d
    increment; a final inverse bump restores the second control. Requires
    d + 1 <= 4 so the raised wire stays within the ququart cap.
    """
    if d not in (2, 3):
        raise CircuitError(f"d-ary lowering supports d in {{2, 3}}, got d={d} (d+1 must stay <= 4)")
    dims = [2] * (max(c1, c2, target) + 1)
    dims[c1] = dims[target] = d
    dims[c2] = d + 1
    c = Circuit(dims)
    c.inc(c2, +1, d + 1, ((c1, d - 1),))
    c.inc(target, +1, d, ((c2, d),))
    c.inc(c2, -1, d + 1, ((c1, d - 1),))
    return c


def lower_circuit(c: Circuit, method: str = "vchain") -> Circuit:
    """Replace every abstract MCT in `c`, returning a fully lowered circuit.

    Chain/tree merge order follows each MCT's control list, except that the
    V-chain's never-raised head control is greedily chosen among controls not
    yet raised elsewhere, which keeps the set of qudit-valued wires (and so
    the simulation's state size) small. Gate counts and depth are unaffected
    by that choice.
    """
    if method not in ("vchain", "tree"):
        raise CircuitError(f"unknown lowering method {method!r}")
    dims = list(c.dims)
    out_gates: list[Gate] = []
    raised: set[int] = set()
    for g in c.gates:
        if g.kind != KIND_MCT:
            out_gates.append(g)
            continue
        _check_binary_mct(g)
        controls = [w for w, _ in g.controls]
        if method == "vchain" or len(controls) == 1:
            head = next((w for w in controls if w not in raised), controls[0])
            chain = [head] + [w for w in controls if w != head]
            gates, new_raised = vchain_gates(chain, g.target)
            raised |= new_raised
            for w in new_raised:
                dims[w] = max(dims[w], 3)
        else:
            gates, new_dims = tree_gates(controls, g.target)
            for w, d in new_dims.items():
                dims[w] = max(dims[w], d)
        out_gates.extend(gates)
    return Circuit(dims, c.wires.labels, out_gates)


@dataclass(frozen=True)
class StandardCostEntry:
    """Qubit-only decomposition cost of one n-control Toffoli."""

    n_controls: int
    size: int
    depth: int
    one_qubit: int
    two_qubit: int

    def __post_init__(self):
        if self.size != self.one_qubit + self.two_qubit:
            raise ValueError("size must equal one_qubit + two_qubit")


# Built-in per-arity costs of the conventional decomposition. Above four
# controls entries are linearly extrapolated and reports must flag them.
STANDARD_COSTS = {
    1: StandardCostEntry(1, 1, 1, 0, 1),
    2: StandardCostEntry(2, 15, 12, 9, 6),
    3: StandardCostEntry(3, 27, 22, 14, 13),
    4: StandardCostEntry(4, 77, 60, 48, 29),
}


def standard_cost(n_controls: int, model: dict[int, StandardCostEntry] | None = None
                  ) -> tuple[StandardCostEntry, bool]:
    """Cost entry for an n-control Toffoli; returns (entry, extrapolated).

    `model` may override or extend the built-in table. Missing arities above
    the largest modeled entry are extrapolated linearly from the top two
    rows, and flagged.
    """
    if n_controls <= 0:
        raise ValueError("n_controls must be positive")
    table = dict(STANDARD_COSTS)
    if model:
        table.update(model)
    if n_controls in table:
        return table[n_controls], False
    hi = max(table)
    lo = hi - 1
    if lo not in table:
        raise ValueError(f"cannot extrapolate: no entry for {lo} controls")
    a, b = table[lo], table[hi]
    steps = n_controls - hi
    return StandardCostEntry(
        n_controls,
        b.size + steps * (b.size - a.size),
        b.depth + steps * (b.depth - a.depth),
        b.one_qubit + steps * (b.one_qubit - a.one_qubit),
        b.two_qubit + steps * (b.two_qubit - a.two_qubit),
    ), True
