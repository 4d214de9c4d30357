"""Grover pipeline: diffusers, iteration planning, k-clique and max-clique search.

A search run assembles prep + t * (oracle; diffuser) over the oracle's wire
layout, lowers every abstract MCT, simulates exactly, and measures the vertex
register. The phase target rides in |-> throughout.

Iteration planning:

* known marked count M: t = max(1, floor(pi/4 * sqrt(N/M)));
* unknown M: escalating rounds with one verified measurement each. The
  iteration bound grows sixfold per round and the round's iteration count is
  drawn uniformly below the bound (capped at ceil(sqrt(N)), past which more
  iterations cannot help). A measured outcome only counts when the classical
  clique check confirms it, so a finished search is always correct.

Search-space sizes: 2^n for full-Hilbert prep, C(n, k) for Dicke prep, and n
for W prep. W prep covers selections of n-1 vertices (it is followed by an
X on every vertex wire, turning the weight-1 support into the weight-(n-1)
one), so it is only accepted when k = n - 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import asin, ceil, comb, floor, pi, sin, sqrt

import numpy as np

from .graphs import Graph, bits_to_vertices, enumerate_k_cliques, is_clique, vertices_to_bits
from .ir import Circuit, mct_gate, unitary_gate
from .lowering import lower_circuit
from .oracles import OracleLayout, build_oracle
from .prep import dicke_prep, hadamard_prep, w_state_prep
from .sim import StateVector, probabilities, run, sample

PREP_KINDS = ("hilbert", "dicke", "w")


@dataclass(frozen=True)
class GroverConfig:
    prep: str = "dicke"
    oracle: str = "checking"
    lowering: str = "vchain"
    diffuser: str = "auto"  # auto: standard for hilbert, prep_conjugated otherwise
    shots: int = 1024
    rng_seed: int = 0
    max_boyer_rounds: int = 8

    def __post_init__(self):
        if self.prep not in PREP_KINDS:
            raise ValueError(f"unknown prep {self.prep!r}")
        if self.diffuser not in ("auto", "standard", "prep_conjugated"):
            raise ValueError(f"unknown diffuser {self.diffuser!r}")
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if self.max_boyer_rounds < 1:
            raise ValueError("max_boyer_rounds must be >= 1")

    def resolved_diffuser(self) -> str:
        if self.diffuser != "auto":
            return self.diffuser
        return "standard" if self.prep == "hilbert" else "prep_conjugated"


@dataclass
class SearchResult:
    found: bool
    witness: tuple[int, ...] | None
    k: int
    iterations_used: int
    success_probability: float
    histogram: dict[str, int] = field(default_factory=dict)
    rounds: int = 1
    skipped_k: tuple[int, ...] = ()


def _reflection_about_zero(n: int) -> list:
    """X-conjugated multi-controlled Z on n wires: flips the |0...0> sign."""
    gates = [unitary_gate("X", w) for w in range(n)]
    gates.append(unitary_gate("H", n - 1))
    if n == 1:
        gates.append(unitary_gate("X", 0))
    else:
        gates.append(mct_gate(n - 1, [(w, 1) for w in range(n - 1)]))
    gates.append(unitary_gate("H", n - 1))
    gates.extend(unitary_gate("X", w) for w in range(n))
    return gates


def diffusion_standard(n: int) -> Circuit:
    """Inversion about the uniform superposition: -I + (2/2^n) J up to phase."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = Circuit([2] * n)
    for w in range(n):
        c.h(w)
    c.extend(_reflection_about_zero(n))
    for w in range(n):
        c.h(w)
    return c


def diffusion_prep_conjugated(prep: Circuit) -> Circuit:
    """Exact reflection 2|psi><psi| - I (up to phase) about prep's output."""
    n = prep.n_wires
    c = Circuit([2] * n)
    c.extend(prep.inverse().gates)
    c.extend(_reflection_about_zero(n))
    c.extend(prep.gates)
    return c


def optimal_iterations(n_states: int, n_marked: int) -> int:
    """Grover iteration count for N states, M known marked: floor form, min 1."""
    if n_marked < 1:
        raise ValueError("marked count must be >= 1; use the unknown-M search")
    if n_marked > n_states:
        raise ValueError("marked count exceeds state count")
    return max(1, floor((pi / 4.0) * sqrt(n_states / n_marked)))


def theoretical_success_probability(n_states: int, n_marked: int, iterations: int) -> float:
    """Closed-form marked probability sin^2((2t+1) asin(sqrt(M/N)))."""
    theta = asin(sqrt(n_marked / n_states))
    return sin((2 * iterations + 1) * theta) ** 2


def search_space_size(prep: str, n: int, k: int) -> int:
    if prep == "hilbert":
        return 2 ** n
    if prep == "dicke":
        return comb(n, k)
    if prep == "w":
        return n
    raise ValueError(f"unknown prep {prep!r}")


def prep_circuit(prep: str, n: int, k: int) -> Circuit:
    """Vertex-register initial state for a clique search of size k."""
    if prep == "hilbert":
        return hadamard_prep(n)
    if prep == "dicke":
        return dicke_prep(n, k)
    if prep == "w":
        if k != n - 1:
            raise ValueError("W prep only covers clique size k = n - 1")
        c = w_state_prep(n)
        for w in range(n):
            c.x(w)
        return c
    raise ValueError(f"unknown prep {prep!r}")


def assemble_pipeline_unlowered(g: Graph, k: int, config: GroverConfig, iterations: int
                                ) -> tuple[Circuit, OracleLayout]:
    """Prep + iterations * (oracle; diffuser), abstract MCTs still in place."""
    count_nodes = config.prep == "hilbert"
    oracle_c, layout = build_oracle(g, k, config.oracle, count_nodes)
    pc = prep_circuit(config.prep, g.n, k)
    if config.resolved_diffuser() == "standard":
        diff = diffusion_standard(g.n)
    else:
        diff = diffusion_prep_conjugated(pc)
    big = Circuit([2] * layout.total_wires, labels=layout.labels())
    big.extend(pc.gates)
    big.x(layout.target)
    big.h(layout.target)
    for _ in range(iterations):
        big.extend(oracle_c.gates)
        big.extend(diff.gates)
    return big, layout


def assemble_pipeline(g: Graph, k: int, config: GroverConfig, iterations: int
                      ) -> tuple[Circuit, OracleLayout]:
    """Lowered prep + iterations * (oracle; diffuser) over the oracle layout."""
    big, layout = assemble_pipeline_unlowered(g, k, config, iterations)
    return lower_circuit(big, config.lowering), layout


def _marked_bitstrings(g: Graph, k: int) -> set[str]:
    return {vertices_to_bits(g.n, c) for c in enumerate_k_cliques(g, k)}


def _simulate(g: Graph, k: int, config: GroverConfig, iterations: int
              ) -> tuple[StateVector, OracleLayout]:
    lowered, layout = assemble_pipeline(g, k, config, iterations)
    return run(lowered), layout


def grover_known_m(g: Graph, k: int, config: GroverConfig,
                   iterations: int | None = None) -> SearchResult:
    """Search with the marked count taken from the classical enumeration.

    Simulates the full pipeline at the optimal (or given) iteration count,
    reports the exact marked-state probability, and samples `config.shots`
    measurements; the witness is the most frequent marked outcome.
    """
    marked = _marked_bitstrings(g, k)
    if not marked:
        raise ValueError(f"graph has no {k}-clique; use grover_unknown_m")
    n_states = search_space_size(config.prep, g.n, k)
    t = iterations if iterations is not None else optimal_iterations(n_states, len(marked))
    sv, layout = _simulate(g, k, config, t)
    probs = probabilities(sv, layout.vertex)
    success = sum(p for b, p in probs.items() if b in marked)
    hist = sample(sv, layout.vertex, config.shots, config.rng_seed)
    hits = [bits for bits in hist if bits in marked]
    witness = None
    if hits:
        bits = min(hits, key=lambda b: (-hist[b], b))  # most frequent, ties lexicographic
        witness = tuple(sorted(bits_to_vertices(bits)))
    return SearchResult(found=witness is not None, witness=witness, k=k,
                        iterations_used=t, success_probability=success,
                        histogram=hist)


def grover_unknown_m(g: Graph, k: int, config: GroverConfig) -> SearchResult:
    """Escalating search when the marked count is unknown.

    Round r runs the pipeline with an iteration count drawn uniformly from
    [1, min(6^r, ceil(sqrt(N)))] (round 0 always runs a single iterate),
    measures the vertex register once, and accepts only a classically
    verified k-clique. Returns found=False after `config.max_boyer_rounds`
    fruitless rounds.
    """
    n_states = search_space_size(config.prep, g.n, k)
    rng = np.random.default_rng(config.rng_seed)
    cap = max(1, ceil(sqrt(n_states)))
    total_iterations = 0
    hist: dict[str, int] = {}
    last_success = 0.0
    marked = _marked_bitstrings(g, k)
    for r in range(config.max_boyer_rounds):
        bound = min(6 ** r, cap)
        t = 1 if bound <= 1 else int(rng.integers(1, bound + 1))
        total_iterations += t
        sv, layout = _simulate(g, k, config, t)
        probs = probabilities(sv, layout.vertex)
        last_success = sum(p for b, p in probs.items() if b in marked)
        keys = list(probs)
        weights = np.array([probs[b] for b in keys])
        outcome = keys[int(rng.choice(len(keys), p=weights / weights.sum()))]
        hist[outcome] = hist.get(outcome, 0) + 1
        members = bits_to_vertices(outcome)
        if len(members) == k and is_clique(g, members):
            return SearchResult(found=True, witness=tuple(sorted(members)), k=k,
                                iterations_used=total_iterations,
                                success_probability=last_success,
                                histogram=hist, rounds=r + 1)
    return SearchResult(found=False, witness=None, k=k,
                        iterations_used=total_iterations,
                        success_probability=last_success, histogram=hist,
                        rounds=config.max_boyer_rounds)


def max_clique(g: Graph, config: GroverConfig) -> SearchResult:
    """Descend k = n..2, skipping sizes the edge count already rules out.

    A k-clique needs C(k, 2) edges, so sizes demanding more edges than the
    graph has are skipped without a quantum search. The first verified
    witness wins; if every size fails, vertex 0 stands as the 1-clique.
    """
    if g.n < 2:
        raise ValueError("max_clique needs n >= 2")
    if config.prep == "w":
        raise ValueError("the max-clique driver varies k; W prep fixes k = n - 1")
    skipped = []
    for k in range(g.n, 1, -1):
        if comb(k, 2) > g.m:
            skipped.append(k)
            continue
        result = grover_unknown_m(g, k, config)
        if result.found:
            result.skipped_k = tuple(skipped)
            return result
    return SearchResult(found=True, witness=(0,), k=1, iterations_used=0,
                        success_probability=1.0, histogram={},
                        skipped_k=tuple(skipped))
