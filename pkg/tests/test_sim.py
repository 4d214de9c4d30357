import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qclique.ir import Circuit, mct_gate
from qclique.lowering import lower_dary, lower_vchain
from qclique.sim import (STATE_ATOL, SimulationError, StateTooLargeError,
                         StateVector, apply_permutation, basis_state, probabilities,
                         run, sample, states_close, unitary_of)


def test_run_two_control_fragment_triggers():
    frag = lower_dary(2)
    out = run(frag, (1, 1, 0))
    assert abs(out.amplitude((1, 1, 1)) - 1) < 1e-12


def test_run_two_control_fragment_idle():
    frag = lower_dary(2)
    out = run(frag, (1, 0, 0))
    assert abs(out.amplitude((1, 0, 0)) - 1) < 1e-12


def test_run_empty_circuit_identity():
    c = Circuit([2, 3])
    rng = np.random.default_rng(5)
    amps = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
    amps /= np.linalg.norm(amps)
    sv = StateVector((2, 3), amps.astype(complex))
    out = run(c, sv)
    assert states_close(out.amps, amps)


def test_run_rejects_abstract_mct():
    c = Circuit([2, 2])
    c.mct(1, [(0, 1)])
    with pytest.raises(SimulationError, match="lower"):
        run(c)


def test_run_rejects_dim_mismatch():
    c = Circuit([2, 2])
    sv = basis_state((2, 3), (0, 0))
    with pytest.raises(SimulationError, match="dims"):
        run(c, sv)


def test_run_rejects_oversized_state():
    with pytest.raises(StateTooLargeError):
        run(Circuit([4] * 13))


def test_norm_preserved_after_every_gate():
    c = Circuit([2, 3, 2])
    c.h(0).inc(1, +1, 3, ((0, 1),)).ry(0.9, 2, ((1, 1),)).z(0).x(2)
    partial = Circuit([2, 3, 2])
    for g in c.gates:
        partial.append(g)
        assert abs(run(partial).norm() - 1) < STATE_ATOL


def test_increment_order_m_is_identity():
    for m in (2, 3, 4):
        c = Circuit([m])
        for _ in range(m):
            c.inc(0, +1, m)
        for j in range(m):
            assert abs(run(c, (j,)).amplitude((j,)) - 1) < 1e-12


def test_increment_ignores_levels_at_or_above_modulus():
    c = Circuit([4]).inc(0, +1, 3)
    assert abs(run(c, (3,)).amplitude((3,)) - 1) < 1e-12
    assert abs(run(c, (2,)).amplitude((0,)) - 1) < 1e-12


def test_run_linearity():
    c = Circuit([2, 2])
    c.h(0).x(1, ((0, 1),)).ry(0.4, 0)
    rng = np.random.default_rng(0)
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    alpha, beta = 0.3 - 0.2j, 1.1 + 0.5j
    mixed = StateVector((2, 2), alpha * a + beta * b)
    lhs = run(c, mixed).amps
    rhs = alpha * run(c, StateVector((2, 2), a.astype(complex))).amps \
        + beta * run(c, StateVector((2, 2), b.astype(complex))).amps
    assert np.max(np.abs(lhs - rhs)) < 1e-9


def test_probabilities_single_wire_marginal():
    c = Circuit([2, 2]).h(0).h(1)
    sv = run(c)
    p = probabilities(sv, [0])
    assert p == pytest.approx({"0": 0.5, "1": 0.5})


def test_probabilities_sum_to_one():
    c = Circuit([2, 3, 2]).h(0).inc(1, 1, 3, ((0, 1),)).ry(0.8, 2)
    sv = run(c)
    for subset in ([0], [1, 2], [2, 0], [0, 1, 2]):
        assert sum(probabilities(sv, subset).values()) == pytest.approx(1.0, abs=1e-9)


def test_probabilities_key_order_follows_subset():
    sv = basis_state((2, 2), (0, 1))
    assert probabilities(sv, [1, 0])["10"] == pytest.approx(1.0)


def test_sample_deterministic_per_seed():
    sv = run(Circuit([2, 2]).h(0).h(1))
    h1 = sample(sv, [0, 1], 500, seed=9)
    h2 = sample(sv, [0, 1], 500, seed=9)
    assert h1 == h2


def test_sample_point_mass():
    sv = basis_state((2,), (0,))
    assert sample(sv, [0], 77, seed=1) == {"0": 77}


def test_sample_frozen_biased_coin():
    # 0.9/0.1 split, 10^4 shots: frozen seeded histogram, within 0.02 of 0.9
    sv = StateVector((2,), np.array([np.sqrt(0.9), np.sqrt(0.1)], dtype=complex))
    hist = sample(sv, [0], 10_000, seed=123)
    assert hist == {"0": 8945, "1": 1055}
    assert abs(hist["0"] / 10_000 - 0.9) < 0.02


def test_unitary_of_mct_fragment_is_permutation():
    frag = lower_vchain(mct_gate(3, [(0, 1), (1, 1), (2, 1)]))
    u = unitary_of(frag)
    # restricted to binary basis columns, rows must be the MCT permutation
    dims = tuple(frag.dims)
    for bits in itertools.product((0, 1), repeat=4):
        expect = list(bits)
        if bits[0] == bits[1] == bits[2] == 1:
            expect[3] ^= 1
        col = np.ravel_multi_index(bits, dims)
        row = np.ravel_multi_index(tuple(expect), dims)
        assert abs(u[row, col] - 1) < 1e-9
        assert abs(np.linalg.norm(u[:, col]) - 1) < 1e-9


def test_unitary_of_inverse_composes_to_identity():
    c = Circuit([2, 3]).h(0).inc(1, 1, 3, ((0, 1),)).ry(0.3, 0, ((1, 2),))
    u = unitary_of(c)
    v = unitary_of(c.inverse())
    assert np.max(np.abs(v @ u - np.eye(6))) < 1e-9


def test_unitary_of_size_cap():
    with pytest.raises(SimulationError, match="capped"):
        unitary_of(Circuit([2] * 13))


def test_apply_permutation_matches_simulation():
    frag = lower_vchain(mct_gate(4, [(0, 1), (1, 1), (2, 1), (3, 1)]))
    for bits in itertools.product((0, 1), repeat=5):
        perm = apply_permutation(frag, bits)
        out = run(frag, bits)
        assert abs(out.amplitude(perm) - 1) < 1e-12


def test_apply_permutation_rejects_amplitude_gates():
    c = Circuit([2]).h(0)
    with pytest.raises(SimulationError, match="permutation"):
        apply_permutation(c, (0,))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3), st.integers(0, 500))
def test_increment_permutation_property(m, delta, seed):
    # applying the increment m times returns every basis state to itself
    c = Circuit([m])
    for _ in range(m):
        c.inc(0, delta % m if delta % m else 1, m)
    rng = np.random.default_rng(seed)
    j = int(rng.integers(0, m))
    assert abs(run(c, (j,)).amplitude((j,)) - 1) < 1e-12
