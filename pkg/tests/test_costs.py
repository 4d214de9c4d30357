import json

import pytest

from qclique.costs import (CostReport, analyze_instance, analyze_qudit, analyze_standard,
                           compare, emit_table)
from qclique.ir import Circuit, mct_gate
from qclique.lowering import lower_circuit, lower_vchain
from qclique.oracles import checking_oracle, non_mct_counts, toffoli_census
from qclique.reference_costs import (REFERENCE_INSTANCE_COSTS, REFERENCE_ORACLE_TOTALS,
                                     reference_for, reference_graphs)


def test_analyze_qudit_lowered_toffoli():
    report = analyze_qudit(lower_vchain(mct_gate(2, [(0, 1), (1, 1)])))
    assert (report.two_qudit, report.size, report.depth) == (3, 3, 3)
    assert report.one_qubit == report.two_qubit == 0


def test_analyze_qudit_four_controls():
    report = analyze_qudit(lower_vchain(mct_gate(4, [(w, 1) for w in range(4)])))
    assert report.size == 7 and report.depth == 7 and report.two_qudit == 7


def test_analyze_qudit_empty_circuit():
    report = analyze_qudit(Circuit([2]))
    assert report.size == report.depth == 0
    assert report.one_qubit == report.two_qubit == report.two_qudit == 0


def test_analyze_qudit_rejects_abstract():
    c = Circuit([2, 2])
    c.mct(1, [(0, 1)])
    with pytest.raises(ValueError, match="lower"):
        analyze_qudit(c)


def test_analyze_qudit_classification_by_levels():
    # a CNOT stays a two-qubit gate even on a wire some fragment raised
    c = Circuit([2, 3])
    c.h(0)
    c.x(1, ((0, 1),))          # binary levels only -> two-qubit
    c.inc(1, +1, 3, ((0, 1),))  # modulus 3 -> qudit
    c.x(0, ((1, 2),))          # trigger at level 2 -> qudit
    report = analyze_qudit(c)
    assert (report.one_qubit, report.two_qubit, report.two_qudit) == (1, 1, 2)


def test_analyze_standard_single_toffoli():
    report = analyze_standard({2: 1})
    assert (report.size, report.depth) == (15, 12)
    assert (report.one_qubit, report.two_qubit) == (9, 6)


def test_analyze_standard_worked_example_qudit_side():
    # census 14 x 2-ctrl + 3 x 3-ctrl + 1 x 4-ctrl: chain sizes 42 + 15 + 7
    census = {2: 14, 3: 3, 4: 1}
    c = Circuit([2] * 6)
    for arity, count in census.items():
        for _ in range(count):
            c.mct(5, [(w, 1) for w in range(arity)])
    qud = analyze_qudit(lower_circuit(c, "vchain"))
    assert qud.size == 42 + 15 + 7 == 64


def test_analyze_standard_extras_only():
    report = analyze_standard({}, extra_1q=5, extra_2q=2)
    assert report.size == 7 and report.depth == 7
    assert report.one_qubit == 5 and report.two_qubit == 2


def test_analyze_standard_extrapolation_flag():
    assert analyze_standard({5: 1}).extrapolated
    assert not analyze_standard({4: 1}).extrapolated


def test_vchain_size_identity_for_lowered_oracle(demo6):
    c, _ = checking_oracle(demo6, 4, count_nodes=True)
    census = toffoli_census(c)
    ones, twos = non_mct_counts(c)
    lowered = lower_circuit(c, "vchain")
    report = analyze_qudit(lowered)
    assert report.size == sum((2 * a - 1) * n for a, n in census.items()) + ones + twos


def test_compare_percentages():
    std = CostReport("standard_model", 15, 1731, 909, 0, 2640, 1284)
    qud = CostReport("qudit_vchain", 15, 42, 175, 510, 727, 688)
    pct = compare(std, qud)
    assert round(pct["size_reduction_pct"]) == 72
    assert round(pct["depth_reduction_pct"]) == 46


def test_compare_equal_reports_zero():
    r = CostReport("standard_model", 3, 1, 1, 0, 2, 2)
    pct = compare(r, r)
    assert pct["size_reduction_pct"] == 0.0 and pct["depth_reduction_pct"] == 0.0


def test_compare_scale_invariant():
    std = CostReport("standard_model", 3, 60, 40, 0, 100, 80)
    qud = CostReport("qudit_vchain", 3, 10, 10, 20, 40, 30)
    std2 = CostReport("standard_model", 3, 180, 120, 0, 300, 240)
    qud2 = CostReport("qudit_vchain", 3, 30, 30, 60, 120, 90)
    assert compare(std, qud) == pytest.approx(compare(std2, qud2))


def test_compare_rejects_zero_standard():
    z = CostReport("standard_model", 1, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        compare(z, z)


def test_analyze_instance_deterministic(one_triangle4):
    a = analyze_instance(one_triangle4, 3, prep="hilbert", oracle="increment")
    b = analyze_instance(one_triangle4, 3, prep="hilbert", oracle="increment")
    assert a[0] == b[0] and a[1] == b[1]


def test_analyze_instance_headline_reduction(one_triangle4):
    std, qud = analyze_instance(one_triangle4, 3, prep="hilbert", oracle="increment")
    pct = compare(std, qud)
    assert pct["size_reduction_pct"] >= 60.0
    assert pct["depth_reduction_pct"] >= 40.0


def test_emit_table_pair_rows():
    std = CostReport("standard_model", 3, 9, 6, 0, 15, 12)
    qud = CostReport("qudit_vchain", 3, 0, 0, 3, 3, 3)
    text = emit_table([std.as_dict("toffoli"), qud.as_dict("toffoli")], "markdown")
    lines = text.splitlines()
    assert len(lines) == 4  # header, rule, two rows
    assert "standard_model" in lines[2] and "qudit_vchain" in lines[3]


def test_emit_table_eight_rows_with_references():
    rows = []
    graphs = reference_graphs()
    for name in graphs:
        ref = reference_for("increment", "w", name)
        std, qud = analyze_instance(graphs[name], 3, prep="w", oracle="increment")
        rows.append(std.as_dict(name, ref["standard"]))
        rows.append(qud.as_dict(name, ref["qudit"]))
    text = emit_table(rows, "markdown")
    assert len(text.splitlines()) == 10
    assert "ref_size" in text.splitlines()[0]


def test_emit_table_empty_and_formats():
    assert emit_table([], "markdown").count("\n") == 1  # header + rule
    assert emit_table([], "csv").startswith("instance,")
    assert json.loads(emit_table([], "json")) == []
    with pytest.raises(ValueError):
        emit_table([], "xml")


def test_reference_tables_complete():
    graphs = set(reference_graphs())
    assert len(REFERENCE_INSTANCE_COSTS) == 6
    for combo, rows in REFERENCE_INSTANCE_COSTS.items():
        assert set(rows) == graphs
        for per_method in rows.values():
            assert set(per_method) == {"standard", "qudit"}
    assert REFERENCE_ORACLE_TOTALS[("checking", "hilbert")]["total"] == 63
    assert REFERENCE_ORACLE_TOTALS[("increment", "w")]["total"] == 8


def test_reference_headline_row_values():
    ref = reference_for("increment", "hilbert", "onetriangle4")
    assert ref["standard"]["size"] == 2640 and ref["qudit"]["size"] == 727
    assert ref["standard"]["depth"] == 1284 and ref["qudit"]["depth"] == 688
