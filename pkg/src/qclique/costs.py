"""Gate-census cost reports: intermediate-qudit circuits vs the qubit model.

Gates are classed by the levels they semantically touch, not by the capacity
of the wires they sit on: an increment with modulus >= 3 or any control
triggered at level >= 2 is a qudit-class gate; everything else is a plain
one- or two-qubit gate. That keeps a CNOT between two wires that some other
fragment raised classified as the binary gate it is.

The standard-model side prices each abstract MCT from the per-arity table in
`lowering.STANDARD_COSTS` and adds depth sequentially (one unit per
pass-through gate, the tabulated depth per MCT) -- the additive accounting
the published comparison uses. The qudit side measures the lowered circuit
directly, with true layered depth.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph
from .grover import GroverConfig, assemble_pipeline_unlowered, optimal_iterations, search_space_size
from .ir import Circuit, Gate, KIND_INCREMENT
from .lowering import StandardCostEntry, lower_circuit, standard_cost
from .oracles import non_mct_counts, toffoli_census


@dataclass
class CostReport:
    method: str  # "standard_model" | "qudit_vchain" | "qudit_tree"
    wires: int
    one_qubit: int
    two_qubit: int
    two_qudit: int
    size: int
    depth: int
    toffoli_census: dict[int, int] = field(default_factory=dict)
    extrapolated: bool = False

    def __post_init__(self):
        assert self.size == self.one_qubit + self.two_qubit + self.two_qudit
        assert self.depth <= self.size

    def as_dict(self, instance: str = "", reference: dict | None = None) -> dict:
        out = {
            "instance": instance,
            "method": self.method,
            "wires": self.wires,
            "gates": {"q1": self.one_qubit, "q2": self.two_qubit, "qd": self.two_qudit},
            "size": self.size,
            "depth": self.depth,
            "census": {str(k): v for k, v in sorted(self.toffoli_census.items())},
            "extrapolated": self.extrapolated,
        }
        if reference is not None:
            out["paper_ref"] = reference
        return out


def _touches_qudit_levels(g: Gate) -> bool:
    if g.kind == KIND_INCREMENT and g.modulus >= 3:
        return True
    return any(v >= 2 for _, v in g.controls)


def analyze_qudit(c: Circuit, method: str = "qudit_vchain") -> CostReport:
    """Census of a fully lowered circuit; size and depth measured directly."""
    if c.has_abstract_gates():
        raise ValueError("circuit still contains abstract MCTs; lower it first")
    q1 = q2 = qd = 0
    for g in c.gates:
        if _touches_qudit_levels(g):
            qd += 1
        elif len(g.wires()) == 1:
            q1 += 1
        else:
            q2 += 1
    return CostReport(method=method, wires=c.n_wires, one_qubit=q1, two_qubit=q2,
                      two_qudit=qd, size=c.size(), depth=c.depth())


def analyze_standard(census: dict[int, int], extra_1q: int = 0, extra_2q: int = 0,
                     model: dict[int, StandardCostEntry] | None = None,
                     wires: int = 0) -> CostReport:
    """Price an MCT census under the qubit-only decomposition model.

    Non-MCT pass-through gates contribute their own counts and one depth
    unit each; per-arity costs and depths are summed sequentially.
    """
    q1, q2, size, depth = extra_1q, extra_2q, extra_1q + extra_2q, extra_1q + extra_2q
    extrapolated = False
    for arity in sorted(census):
        count = census[arity]
        entry, extr = standard_cost(arity, model)
        extrapolated = extrapolated or extr
        q1 += count * entry.one_qubit
        q2 += count * entry.two_qubit
        size += count * entry.size
        depth += count * entry.depth
    return CostReport(method="standard_model", wires=wires, one_qubit=q1,
                      two_qubit=q2, two_qudit=0, size=size, depth=depth,
                      toffoli_census=dict(census), extrapolated=extrapolated)


def compare(standard: CostReport, qudit: CostReport) -> dict[str, float]:
    """Percentage reductions 100 * (1 - qudit/standard) for size and depth."""
    if standard.size == 0:
        raise ValueError("standard report has size 0")
    if standard.depth == 0:
        raise ValueError("standard report has depth 0")
    return {
        "size_reduction_pct": 100.0 * (1.0 - qudit.size / standard.size),
        "depth_reduction_pct": 100.0 * (1.0 - qudit.depth / standard.depth),
    }


def analyze_instance(g: Graph, k: int, prep: str = "hilbert", oracle: str = "checking",
                     lowering: str = "vchain", iterations: int | None = None
                     ) -> tuple[CostReport, CostReport]:
    """(standard, qudit) reports for one full search pipeline.

    The pipeline is sized for a single marked state (the convention the
    published instance tables use), so the iteration count defaults to
    optimal_iterations(N, 1) for the chosen preparation.
    """
    config = GroverConfig(prep=prep, oracle=oracle, lowering=lowering)
    if iterations is None:
        iterations = optimal_iterations(search_space_size(prep, g.n, k), 1)
    big, layout = assemble_pipeline_unlowered(g, k, config, iterations)
    census = toffoli_census(big)
    extra_1q, extra_2q = non_mct_counts(big)
    std = analyze_standard(census, extra_1q, extra_2q, wires=layout.total_wires)
    lowered = lower_circuit(big, lowering)
    qud = analyze_qudit(lowered, method=f"qudit_{lowering}")
    qud.toffoli_census = census
    return std, qud


def _markdown_table(rows: list[dict]) -> str:
    cols = ["instance", "method", "wires", "q1", "q2", "qd", "size", "depth", "extrapolated"]
    have_ref = any("paper_ref" in r for r in rows)
    if have_ref:
        cols += ["ref_size", "ref_depth"]
    lines = ["| " + " | ".join(cols) + " |",
             "|" + "|".join("---" for _ in cols) + "|"]
    for r in rows:
        ref = r.get("paper_ref") or {}
        vals = [r["instance"], r["method"], r["wires"], r["gates"]["q1"], r["gates"]["q2"],
                r["gates"]["qd"], r["size"], r["depth"], r["extrapolated"]]
        if have_ref:
            vals += [ref.get("size", ""), ref.get("depth", "")]
        lines.append("| " + " | ".join(str(v) for v in vals) + " |")
    return "\n".join(lines)


def _csv_table(rows: list[dict]) -> str:
    cols = ["instance", "method", "wires", "q1", "q2", "qd", "size", "depth",
            "extrapolated", "ref_size", "ref_depth"]
    lines = [",".join(cols)]
    for r in rows:
        ref = r.get("paper_ref") or {}
        vals = [r["instance"], r["method"], r["wires"], r["gates"]["q1"], r["gates"]["q2"],
                r["gates"]["qd"], r["size"], r["depth"], r["extrapolated"],
                ref.get("size", ""), ref.get("depth", "")]
        lines.append(",".join(str(v) for v in vals))
    return "\n".join(lines)


def emit_table(rows: list[dict], fmt: str = "markdown") -> str:
    """Render report rows (as produced by CostReport.as_dict) to text."""
    if fmt == "markdown":
        return _markdown_table(rows)
    if fmt == "csv":
        return _csv_table(rows)
    if fmt == "json":
        import json
        return json.dumps(rows, indent=2, sort_keys=True)
    raise ValueError(f"unknown table format {fmt!r}")
