"""Grover-search circuit synthesis for clique problems with intermediate qudits.

The package covers the whole pipeline: graph parsing and classical clique
references, a mixed-dimension circuit IR, ancilla-free multi-controlled
Toffoli lowering through qutrit/ququart levels, clique phase oracles, state
preparation (uniform, W, Dicke), Grover drivers for known and unknown
solution counts, an exact mixed-radix state-vector simulator, and
standard-vs-qudit cost reports.
"""
from .costs import CostReport, analyze_instance, analyze_qudit, analyze_standard, compare, emit_table
from .graphs import (Graph, GraphFormatError, bits_to_vertices, enumerate_k_cliques,
                     graph_from_edges, induced_edge_count, is_clique,
                     max_clique_bruteforce, parse_graph, vertices_to_bits)
from .grover import (GroverConfig, SearchResult, assemble_pipeline,
                     diffusion_prep_conjugated, diffusion_standard, grover_known_m,
                     grover_unknown_m, max_clique, optimal_iterations,
                     search_space_size, theoretical_success_probability)
from .ir import (Circuit, CircuitError, Gate, WireTable, cancel_adjacent_inverses,
                 circuit_to_text, increment_gate, mct_gate, unitary_gate)
from .lowering import (StandardCostEntry, lower_circuit, lower_dary, lower_tree,
                       lower_vchain, standard_cost, tree_compute_depth)
from .oracles import (OracleKind, OracleLayout, checking_oracle, controlled_increment,
                      counter_width, equality_compare, increment_oracle, non_mct_counts,
                      toffoli_census)
from .prep import PrepSpec, dicke_prep, hadamard_prep, w_state_prep
from .sim import (StateVector, SimulationError, StateTooLargeError, apply_permutation,
                  basis_state, probabilities, run, sample, states_close, unitary_of)

__version__ = "0.1.0"
