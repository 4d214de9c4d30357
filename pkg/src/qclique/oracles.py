"""Phase oracles marking k-clique vertex selections.

Both variants share one structure: count induced edges (and, for full-space
searches, selected vertices) into ripple counters, compare each counter to
its clique value with an X-conjugated MCT onto a flag, flip the target off
the flag conjunction, then uncompute everything. The target wire is operated
in the |-> phase-kickback convention, so the flip multiplies a marked basis
state's amplitude by -1.

* checking: each edge's counter increment is controlled directly on the two
  endpoint wires.
* increment: each edge first computes a one-wire edge-exists flag, the
  counter increments off that flag, and the flag is uncomputed per edge.

Counter widths: the edge counter holds C(k, 2), the node counter holds k.
The node counter is widened past ceil(log2(k+1)) when a selection of
k + 2^w <= n vertices could alias k modulo 2^w; with that, the flag
conjunction marks exactly the k-cliques over the whole space. With weight-k
state preparation the node count is already fixed and node counting is
omitted (`count_nodes=False`).

All counting gates are emitted as abstract MCTs; lower with
`qclique.lowering.lower_circuit` before simulation.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .graphs import Graph
from .ir import Circuit, Gate, KIND_MCT, mct_gate, unitary_gate


class OracleWarning(UserWarning):
    pass


def counter_width(max_count: int) -> int:
    """Bits needed to hold values 0..max_count: ceil(log2(max_count + 1))."""
    if max_count < 1:
        raise ValueError("max_count must be >= 1")
    return max_count.bit_length()


def _node_counter_width(k: int, n: int) -> int:
    # Widen until no over-weight selection (<= n vertices) aliases k mod 2^w.
    w = counter_width(k)
    while k + (1 << w) <= n:
        w += 1
    return w


@dataclass(frozen=True)
class OracleKind:
    variant: str  # "checking" | "increment"
    count_nodes: bool = True

    def __post_init__(self):
        if self.variant not in ("checking", "increment"):
            raise ValueError(f"unknown oracle variant {self.variant!r}")


@dataclass(frozen=True)
class OracleLayout:
    """Wire assignment for one oracle instance.

    Vertex wires come first (vertex 0 = wire 0 = leftmost ket character),
    then the edge counter (least-significant bit first), edge flag, optional
    node counter and flag, the increment variant's edge-exists scratch wire,
    and the phase target last.
    """

    n: int
    k: int
    vertex: tuple[int, ...]
    edge_counter: tuple[int, ...]
    edge_flag: int
    node_counter: tuple[int, ...]
    node_flag: int | None
    edge_scratch: int | None
    target: int

    @property
    def total_wires(self) -> int:
        return self.target + 1

    @property
    def count_nodes(self) -> bool:
        return self.node_flag is not None

    def labels(self) -> list[str]:
        out = [""] * self.total_wires
        for i, w in enumerate(self.vertex):
            out[w] = f"v{i}"
        for i, w in enumerate(self.edge_counter):
            out[w] = f"edge_counter{i}"
        out[self.edge_flag] = "edge_flag"
        for i, w in enumerate(self.node_counter):
            out[w] = f"node_counter{i}"
        if self.node_flag is not None:
            out[self.node_flag] = "node_flag"
        if self.edge_scratch is not None:
            out[self.edge_scratch] = "edge_exists"
        out[self.target] = "target"
        return out


def make_layout(g: Graph, k: int, kind: OracleKind) -> OracleLayout:
    if not (2 <= k <= g.n):
        raise ValueError(f"k={k} out of range for n={g.n}")
    w = g.n
    edge_counter = tuple(range(w, w + counter_width(comb(k, 2))))
    w = edge_counter[-1] + 1
    edge_flag = w
    w += 1
    node_counter: tuple[int, ...] = ()
    node_flag = None
    if kind.count_nodes:
        node_counter = tuple(range(w, w + _node_counter_width(k, g.n)))
        w = node_counter[-1] + 1
        node_flag = w
        w += 1
    edge_scratch = None
    if kind.variant == "increment":
        edge_scratch = w
        w += 1
    return OracleLayout(
        n=g.n, k=k, vertex=tuple(range(g.n)), edge_counter=edge_counter,
        edge_flag=edge_flag, node_counter=node_counter, node_flag=node_flag,
        edge_scratch=edge_scratch, target=w,
    )


def controlled_increment(counter_wires, controls) -> list[Gate]:
    """Ripple +1 (mod 2^w) on the counter when every control is satisfied.

    Most-significant bit first: bit j flips when the controls hold and all
    lower bits are 1 (the carry condition). With no controls at all this is
    a plain increment, degenerating to a bare X on a one-bit counter.
    """
    counter = list(counter_wires)
    controls = list(controls)
    if not counter:
        raise ValueError("counter must have at least one wire")
    if set(w for w, _ in controls) & set(counter):
        raise ValueError("counter wires may not appear among the controls")
    gates = []
    for j in range(len(counter) - 1, -1, -1):
        ctrls = controls + [(counter[i], 1) for i in range(j)]
        if ctrls:
            gates.append(mct_gate(counter[j], ctrls))
        else:
            gates.append(unitary_gate("X", counter[j]))
    return gates


def equality_compare(counter_wires, constant: int, flag: int) -> list[Gate]:
    """Flip `flag` iff the counter holds `constant`.

    X gates invert the zero bits of the constant so a single all-ones MCT
    recognises it, then the X conjugation is undone.
    """
    counter = list(counter_wires)
    if not 0 <= constant < (1 << len(counter)):
        raise ValueError(f"constant {constant} does not fit in {len(counter)} bits")
    conj = [unitary_gate("X", counter[j])
            for j in range(len(counter)) if not (constant >> j) & 1]
    body = [mct_gate(flag, [(w, 1) for w in counter])]
    return conj + body + [g.inverse() for g in reversed(conj)]


def _node_count_gates(layout: OracleLayout) -> list[Gate]:
    gates = []
    for v in layout.vertex:
        gates.extend(controlled_increment(layout.node_counter, [(v, 1)]))
    gates.extend(equality_compare(layout.node_counter, layout.k, layout.node_flag))
    return gates


def _flip_gate(layout: OracleLayout) -> Gate:
    flags = [(layout.edge_flag, 1)]
    if layout.node_flag is not None:
        flags.append((layout.node_flag, 1))
    return mct_gate(layout.target, flags)


def _warn_if_unsatisfiable(g: Graph, k: int):
    if comb(k, 2) > g.m:
        warnings.warn(
            f"a {k}-clique needs {comb(k, 2)} edges but the graph has {g.m}; "
            "the oracle will mark no states", OracleWarning, stacklevel=3)


def _oracle_circuit(g: Graph, k: int, kind: OracleKind) -> tuple[Circuit, OracleLayout]:
    _warn_if_unsatisfiable(g, k)
    layout = make_layout(g, k, kind)
    compute: list[Gate] = []
    for u, v in g.sorted_edges():
        if kind.variant == "checking":
            compute.extend(controlled_increment(layout.edge_counter, [(u, 1), (v, 1)]))
        else:
            exists = mct_gate(layout.edge_scratch, [(u, 1), (v, 1)])
            compute.append(exists)
            compute.extend(controlled_increment(layout.edge_counter,
                                                [(layout.edge_scratch, 1)]))
            compute.append(exists)
    compute.extend(equality_compare(layout.edge_counter, comb(k, 2), layout.edge_flag))
    if kind.count_nodes:
        compute.extend(_node_count_gates(layout))
    gates = compute + [_flip_gate(layout)] + [x.inverse() for x in reversed(compute)]
    circuit = Circuit([2] * layout.total_wires, labels=layout.labels(), gates=gates)
    return circuit, layout


def checking_oracle(g: Graph, k: int, count_nodes: bool = True) -> tuple[Circuit, OracleLayout]:
    """Oracle whose edge counting is controlled directly on vertex pairs."""
    return _oracle_circuit(g, k, OracleKind("checking", count_nodes))


def increment_oracle(g: Graph, k: int, count_nodes: bool = True) -> tuple[Circuit, OracleLayout]:
    """Oracle that computes a per-edge flag, then counts off the flag."""
    return _oracle_circuit(g, k, OracleKind("increment", count_nodes))


def build_oracle(g: Graph, k: int, variant: str, count_nodes: bool = True
                 ) -> tuple[Circuit, OracleLayout]:
    kind = OracleKind(variant, count_nodes)
    return _oracle_circuit(g, k, kind)


def toffoli_census(c: Circuit) -> dict[int, int]:
    """Histogram of abstract-MCT control counts in an unlowered circuit."""
    census: dict[int, int] = {}
    for g in c.gates:
        if g.kind == KIND_MCT:
            arity = len(g.controls)
            census[arity] = census.get(arity, 0) + 1
    return dict(sorted(census.items()))


def non_mct_counts(c: Circuit) -> tuple[int, int]:
    """(single-wire, two-wire) totals of the non-MCT gates in a circuit."""
    ones = twos = 0
    for g in c.gates:
        if g.kind == KIND_MCT:
            continue
        if len(g.wires()) == 1:
            ones += 1
        else:
            twos += 1
    return ones, twos
