import itertools
from math import comb, sqrt

import numpy as np
import pytest

from qclique.prep import PrepSpec, dicke_prep, hadamard_prep, w_state_prep
from qclique.sim import ANCILLA_ATOL, run


def _check_uniform_on_weight(sv, n, k):
    """Real non-negative amplitude 1/sqrt(C(n,k)) on weight-k states, 0 elsewhere."""
    target = 1.0 / sqrt(comb(n, k))
    for bits in itertools.product((0, 1), repeat=n):
        a = sv.amplitude(bits)
        if sum(bits) == k:
            assert abs(a - target) < 1e-9, (bits, a)
        else:
            assert abs(a) < 1e-9, (bits, a)


def test_hadamard_single_wire():
    sv = run(hadamard_prep(1))
    assert np.allclose(sv.flat(), [1 / sqrt(2), 1 / sqrt(2)])


def test_hadamard_two_wires_uniform():
    sv = run(hadamard_prep(2))
    assert np.allclose(sv.flat(), 0.5)


def test_hadamard_six_wires_uniform():
    sv = run(hadamard_prep(6))
    assert sv.size == 64
    assert np.allclose(sv.flat(), 1 / 8)
    assert hadamard_prep(6).depth() == 1


def test_w_state_single_wire_forced():
    sv = run(w_state_prep(1))
    assert abs(sv.amplitude((1,)) - 1) < 1e-12


def test_w_state_three_wires():
    sv = run(w_state_prep(3))
    _check_uniform_on_weight(sv, 3, 1)


def test_w_state_six_wires():
    sv = run(w_state_prep(6))
    _check_uniform_on_weight(sv, 6, 1)


def test_w_state_matches_dicke_weight_one():
    a = run(w_state_prep(5)).flat()
    b = run(dicke_prep(5, 1)).flat()
    assert np.max(np.abs(a - b)) < 1e-9


def test_dicke_3_1():
    _check_uniform_on_weight(run(dicke_prep(3, 1)), 3, 1)


def test_dicke_6_4():
    _check_uniform_on_weight(run(dicke_prep(6, 4)), 6, 4)


def test_dicke_full_weight_single_state():
    sv = run(dicke_prep(4, 4))
    assert abs(sv.amplitude((1, 1, 1, 1)) - 1) < 1e-9


@pytest.mark.parametrize("n,k", [(2, 1), (4, 2), (5, 3), (6, 2), (7, 3)])
def test_dicke_general_support(n, k):
    _check_uniform_on_weight(run(dicke_prep(n, k)), n, k)


def test_dicke_gate_count_polynomial():
    # staircase construction: comfortably under cubic growth
    for n in (4, 6, 8):
        assert dicke_prep(n, n // 2).size() < 8 * n * n


def test_dicke_rejects_bad_k():
    with pytest.raises(ValueError):
        dicke_prep(4, 0)
    with pytest.raises(ValueError):
        dicke_prep(4, 5)


@pytest.mark.parametrize("builder,n", [(hadamard_prep, 4), (w_state_prep, 5)])
def test_prep_inverse_returns_to_zero(builder, n):
    c = builder(n)
    both = c.copy().extend(c.inverse().gates)
    sv = run(both)
    assert abs(abs(sv.amplitude((0,) * n)) - 1) < 1e-12
    assert 1 - abs(sv.amplitude((0,) * n)) ** 2 < ANCILLA_ATOL


def test_dicke_inverse_returns_to_zero():
    c = dicke_prep(6, 4)
    sv = run(c.copy().extend(c.inverse().gates))
    assert 1 - abs(sv.amplitude((0,) * 6)) ** 2 < ANCILLA_ATOL


def test_prep_spec_sizes():
    assert PrepSpec("hilbert", 6).search_space_size == 64
    assert PrepSpec("w", 6).search_space_size == 6
    assert PrepSpec("dicke", 6, 4).search_space_size == 15


def test_norms():
    for c in (hadamard_prep(5), w_state_prep(6), dicke_prep(6, 3)):
        assert abs(run(c).norm() - 1) < 1e-9
