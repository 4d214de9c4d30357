"""Command-line interface.

Subcommands: kclique, maxclique, decompose, oracle, prep, report. Output
files are written atomically (temp file + rename) into --out, which defaults
to $QCLIQUE_OUTDIR or the working directory; identical flags and seed yield
byte-identical outputs.

Exit codes: 0 success; 2 usage error; 3 instance too large to simulate;
4 no clique found (for maxclique: nothing above a single vertex).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .costs import analyze_instance, compare, emit_table
from .data import BUNDLED, load_bundled
from .graphs import Graph, GraphFormatError, enumerate_k_cliques, parse_graph, vertices_to_bits
from .grover import GroverConfig, SearchResult, grover_known_m, max_clique
from .ir import Circuit, CircuitError, circuit_to_text, mct_gate
from .lowering import lower_tree, lower_vchain
from .oracles import build_oracle, non_mct_counts, toffoli_census
from .prep import dicke_prep, hadamard_prep, w_state_prep
from .reference_costs import reference_for
from .sim import StateTooLargeError, run

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3
EXIT_NO_CLIQUE = 4


def _out_dir(args) -> Path:
    out = args.out or os.environ.get("QCLIQUE_OUTDIR") or "."
    return Path(out)


def _write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_graph(source: str) -> Graph:
    if source in BUNDLED and not os.path.exists(source):
        return load_bundled(source)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file {source!r}: {exc}") from exc
    return parse_graph(text)


def _default_prep(args, g: Graph) -> str:
    if args.prep:
        return args.prep
    return "dicke" if args.k < g.n else "hilbert"


def _config(args, prep: str) -> GroverConfig:
    return GroverConfig(prep=prep, oracle=args.oracle, lowering=args.lowering,
                        shots=args.shots, rng_seed=args.seed,
                        max_boyer_rounds=getattr(args, "rounds", 8))


def _result_json(res: SearchResult, g: Graph, command: str, extra: dict) -> str:
    body = {
        "command": command,
        "found": res.found,
        "witness": sorted(res.witness) if res.witness else None,
        "witness_bits": vertices_to_bits(g.n, res.witness) if res.witness else None,
        "k": res.k,
        "iterations_used": res.iterations_used,
        "success_probability": res.success_probability,
        "rounds": res.rounds,
        "skipped_k": list(res.skipped_k),
        "histogram": res.histogram,
    }
    body.update(extra)
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def _histogram_csv(hist: dict[str, int], shots: int) -> str:
    lines = ["basis_string,count,probability"]
    for bits in sorted(hist):
        lines.append(f"{bits},{hist[bits]},{hist[bits] / shots:.12g}")
    return "\n".join(lines) + "\n"


def _cmd_kclique(args) -> int:
    g = _load_graph(args.graph)
    prep = _default_prep(args, g)
    config = _config(args, prep)
    if not enumerate_k_cliques(g, args.k):
        print(f"no {args.k}-clique exists in this graph", file=sys.stderr)
        return EXIT_NO_CLIQUE
    iterations = None if args.iterations == "auto" else int(args.iterations)
    res = grover_known_m(g, args.k, config, iterations=iterations)
    out = _out_dir(args)
    _write_atomic(out / "kclique_result.json", _result_json(res, g, "kclique", {
        "graph": {"n": g.n, "m": g.m}, "prep": prep, "oracle": args.oracle,
        "lowering": args.lowering, "seed": args.seed, "shots": args.shots}))
    _write_atomic(out / "kclique_histogram.csv", _histogram_csv(res.histogram, args.shots))
    witness = "{" + ",".join(map(str, res.witness)) + "}" if res.witness else "none"
    print(f"k={args.k} witness={witness} P(marked)={res.success_probability:.4f} "
          f"iterations={res.iterations_used}")
    print(f"wrote {out / 'kclique_result.json'} and {out / 'kclique_histogram.csv'}")
    return EXIT_OK


def _cmd_maxclique(args) -> int:
    g = _load_graph(args.graph)
    config = _config(args, args.prep or "dicke")
    res = max_clique(g, config)
    out = _out_dir(args)
    _write_atomic(out / "maxclique_result.json", _result_json(res, g, "maxclique", {
        "graph": {"n": g.n, "m": g.m}, "oracle": args.oracle,
        "lowering": args.lowering, "seed": args.seed, "shots": args.shots}))
    witness = "{" + ",".join(map(str, res.witness)) + "}"
    print(f"maximum clique {witness} size {res.k}")
    print(f"wrote {out / 'maxclique_result.json'}")
    return EXIT_NO_CLIQUE if res.k <= 1 else EXIT_OK


def _cmd_decompose(args) -> int:
    n = args.controls
    gate = mct_gate(n, [(w, 1) for w in range(n)])
    frag = lower_vchain(gate) if args.lowering == "vchain" else lower_tree(gate)
    print(f"{n}-control Toffoli via {args.lowering}: size {frag.size()} "
          f"depth {frag.depth()} max dimension {max(frag.dims)}")
    if args.emit:
        print(circuit_to_text(frag))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    prep = _default_prep(args, g)
    count_nodes = prep == "hilbert"
    circuit, layout = build_oracle(g, args.k, args.kind, count_nodes)
    print(f"oracle {args.kind} k={args.k} prep={prep} count_nodes={count_nodes}")
    print(f"wires: {layout.total_wires} ({', '.join(layout.labels())})")
    census = toffoli_census(circuit)
    total = sum(census.values())
    print("toffoli census: " + ", ".join(f"{a}-ctrl x{c}" for a, c in census.items())
          + f" (total {total})")
    ones, twos = non_mct_counts(circuit)
    print(f"other gates: {ones} single-wire, {twos} two-wire")
    if args.emit:
        print(circuit_to_text(circuit))
    return EXIT_OK


def _amplitude_csv(c: Circuit) -> str:
    sv = run(c)
    lines = ["basis_state,amplitude"]
    flat = sv.flat()
    for j in range(flat.size):
        digits = []
        x = j
        for d in reversed(sv.dims):
            digits.append(x % d)
            x //= d
        bits = "".join(str(t) for t in reversed(digits))
        a = flat[j]
        amp = f"{a.real:.12g}" if abs(a.imag) < 1e-12 else f"{a.real:.12g}{a.imag:+.12g}j"
        lines.append(f"{bits},{amp}")
    return "\n".join(lines) + "\n"


def _cmd_prep(args) -> int:
    if args.kind == "hilbert":
        c = hadamard_prep(args.n)
    elif args.kind == "w":
        c = w_state_prep(args.n)
    else:
        if args.k is None:
            raise CircuitError("dicke prep needs --k")
        c = dicke_prep(args.n, args.k)
    print(f"{args.kind} prep on {args.n} wires: size {c.size()} depth {c.depth()}")
    if args.emit_amplitudes:
        out = _out_dir(args)
        _write_atomic(out / "prep_amplitudes.csv", _amplitude_csv(c))
        print(f"wrote {out / 'prep_amplitudes.csv'}")
    return EXIT_OK


def _cmd_report(args) -> int:
    g = _load_graph(args.graph)
    prep = _default_prep(args, g)
    std, qud = analyze_instance(g, args.k, prep=prep, oracle=args.oracle,
                                lowering=args.lowering)
    instance = Path(args.graph).stem if os.path.exists(args.graph) else args.graph
    ref = reference_for(args.oracle, prep, instance) if args.against_paper else None
    rows = [std.as_dict(instance, ref["standard"] if ref else None),
            qud.as_dict(instance, ref["qudit"] if ref else None)]
    pct = compare(std, qud)
    print(emit_table(rows, args.format))
    print(f"size reduction {pct['size_reduction_pct']:.0f}%  "
          f"depth reduction {pct['depth_reduction_pct']:.0f}%")
    if args.against_paper and ref is None:
        print(f"(no published reference row for instance {instance!r} with "
              f"oracle={args.oracle} prep={prep})")
    out = _out_dir(args)
    payload = {"rows": rows, "comparison": pct}
    _write_atomic(out / "report.json", json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out / 'report.json'}")
    return EXIT_OK


def _add_common(p, with_k=True):
    p.add_argument("--graph", required=True,
                   help="graph file (DIMACS-like) or bundled name: " + ", ".join(BUNDLED))
    if with_k:
        p.add_argument("--k", type=int, required=True, help="clique size to search")
    p.add_argument("--prep", choices=("hilbert", "dicke", "w"), default=None,
                   help="initial state (default: dicke when k < n, else hilbert)")
    p.add_argument("--oracle", choices=("checking", "increment"), default="checking")
    p.add_argument("--lowering", choices=("vchain", "tree"), default="vchain")
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output directory (default $QCLIQUE_OUTDIR or .)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qclique",
                                 description="Grover k-clique / maximum-clique circuit "
                                             "synthesis with intermediate-qudit lowering")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kclique", help="search for a clique of size k")
    _add_common(p)
    p.add_argument("--iterations", default="auto",
                   help="Grover iteration count, or 'auto' for floor(pi/4 sqrt(N/M))")
    p.set_defaults(fn=_cmd_kclique)

    p = sub.add_parser("maxclique", help="find a maximum clique")
    _add_common(p, with_k=False)
    p.add_argument("--rounds", type=int, default=8,
                   help="escalation rounds per clique size in the unknown-M search")
    p.set_defaults(fn=_cmd_maxclique)

    p = sub.add_parser("decompose", help="lower one multi-controlled Toffoli")
    p.add_argument("--controls", type=int, required=True)
    p.add_argument("--lowering", choices=("vchain", "tree"), default="vchain")
    p.add_argument("--emit", action="store_true", help="print the gate listing")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("oracle", help="synthesise a clique oracle and its census")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("checking", "increment"), default="checking")
    p.add_argument("--prep", choices=("hilbert", "dicke", "w"), default=None)
    p.add_argument("--emit", action="store_true", help="print the gate listing")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("prep", help="build an initial-state circuit")
    p.add_argument("--kind", choices=("hilbert", "w", "dicke"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--emit-amplitudes", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_prep)

    p = sub.add_parser("report", help="standard-vs-qudit cost comparison")
    _add_common(p)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--against-paper", action="store_true",
                   help="attach published reference values where available")
    p.set_defaults(fn=_cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except StateTooLargeError as exc:
        print(f"error: instance too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CircuitError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
