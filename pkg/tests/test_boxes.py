import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasibox.boxes import (Box, SliceSpec, chsh_all, chsh_from_correlators, correlators,
                            is_no_signaling, make_deterministic, make_isotropic, make_noise,
                            make_pr, make_slice, random_ns_box, vertex_boxes)
from quasibox.errors import InvalidArgument, SignalingMarginals
from quasibox.quasiprob import ATOMS, f_exponent

PR1_TABLE = np.array([
    [0.5, 0, 0, 0.5],
    [0.5, 0, 0, 0.5],
    [0.5, 0, 0, 0.5],
    [0, 0.5, 0.5, 0],
])


def test_pr1_table():
    np.testing.assert_array_equal(make_pr(0).p, PR1_TABLE)


def test_pr1_correlators():
    cor = correlators(make_pr(0))
    np.testing.assert_array_equal(cor.e, [[1, 1], [1, -1]])
    np.testing.assert_array_equal(cor.ma, [0, 0])


def test_pr_variant1_is_row_swap_of_pr1():
    swapped = PR1_TABLE[[0, 3, 2, 1]]
    np.testing.assert_array_equal(make_pr(1).p, swapped)


@pytest.mark.parametrize("variant", range(8))
def test_every_pr_box_is_extremal(variant):
    box = make_pr(variant)
    assert is_no_signaling(box, 1e-12)
    np.testing.assert_array_equal(np.abs(correlators(box).e), np.ones((2, 2)))
    assert np.count_nonzero(np.isclose(np.abs(chsh_all(box)), 4.0)) == 1


def test_pr_variants_distinct():
    tables = {make_pr(v).p.tobytes() for v in range(8)}
    assert len(tables) == 8


@pytest.mark.parametrize("bad", [-1, 8, 2.5, True, "0"])
def test_pr_bad_variant(bad):
    with pytest.raises(InvalidArgument):
        make_pr(bad)


def test_deterministic_1111():
    box = make_deterministic(1, 1, 1, 1)
    np.testing.assert_array_equal(box.p[:, 3], 1.0)
    cor = correlators(box)
    np.testing.assert_array_equal(cor.e, np.ones((2, 2)))
    np.testing.assert_array_equal(cor.ma, [-1, -1])
    np.testing.assert_array_equal(cor.mb, [-1, -1])


def test_deterministic_is_on_local_facet():
    assert np.max(np.abs(chsh_all(make_deterministic(0, 0, 0, 0)))) == 2.0


@pytest.mark.parametrize("bits", list(itertools.product((0, 1), repeat=4)))
def test_deterministic_local(bits):
    assert np.all(np.abs(chsh_all(make_deterministic(*bits))) <= 2.0)


def test_deterministic_rejects_non_bits():
    with pytest.raises(InvalidArgument):
        make_deterministic(0, 2, 0, 0)


def test_isotropic_endpoints():
    np.testing.assert_array_equal(make_isotropic(0).p, np.full((4, 4), 0.25))
    np.testing.assert_allclose(make_isotropic(1).p, make_pr(0).p, atol=0)


def test_isotropic_half():
    p = make_isotropic(0.5).p
    assert set(np.round(p.ravel(), 15)) == {0.375, 0.125}


@pytest.mark.parametrize("gamma", [-0.1, 1.01])
def test_isotropic_out_of_range(gamma):
    with pytest.raises(InvalidArgument):
        make_isotropic(gamma)


def test_slice_l12():
    box = make_slice([(0.5, make_pr(0)), (0.5, make_pr(1))])
    np.testing.assert_allclose(box.p, 0.5 * (PR1_TABLE + PR1_TABLE[[0, 3, 2, 1]]))


def test_slice_identity():
    assert make_slice(SliceSpec(((1.0, make_noise()),))).allclose(make_noise(), 0)


def test_slice_matches_isotropic():
    g = 0.3
    mixed = make_slice([(g, make_pr(0)), (1 - g, make_noise())])
    np.testing.assert_allclose(mixed.p, make_isotropic(g).p, atol=1e-15)


@pytest.mark.parametrize("terms", [
    [(0.6, "pr"), (0.6, "noise")],
    [(1.2, "pr"), (-0.2, "noise")],
    [],
])
def test_slice_rejects_bad_coefficients(terms):
    lookup = {"pr": make_pr(0), "noise": make_noise()}
    with pytest.raises(InvalidArgument):
        make_slice([(c, lookup[k]) for c, k in terms])


def test_isotropic_correlators():
    g = 0.7
    np.testing.assert_allclose(correlators(make_isotropic(g)).e, [[g, g], [g, -g]], atol=1e-15)


def test_noise_correlators():
    cor = correlators(make_noise())
    assert not cor.e.any() and not cor.ma.any() and not cor.mb.any()


SIGNALING = Box([[1, 0, 0, 0], [0.25, 0.25, 0.25, 0.25], [0.25] * 4, [0.25] * 4])


def test_signaling_correlators_refused():
    with pytest.raises(SignalingMarginals):
        correlators(SIGNALING)
    with pytest.raises(SignalingMarginals):
        chsh_all(SIGNALING)


def test_no_signaling_examples():
    assert is_no_signaling(make_pr(0), 1e-9)
    assert is_no_signaling(make_isotropic(0.9), 1e-9)
    assert not is_no_signaling(SIGNALING, 1e-9)


def test_chsh_examples():
    S = chsh_all(make_pr(0))
    assert S[0, 0] == 4
    assert S[0, 1] == S[1, 0] == S[1, 1] == 0
    assert chsh_all(make_isotropic(0.25))[0, 0] == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("m,n", list(itertools.product((0, 1), (0, 1))))
def test_sign_function_matches_correlator_chsh(m, n):
    # On a point mass the correlator route and 2(-1)^f must agree atom by atom.
    for atom in ATOMS:
        e = correlators(make_deterministic(*atom)).e
        assert chsh_from_correlators(e)[m, n] == 2 * (-1) ** f_exponent(m, n, *atom)


def test_s00_is_eq_chsh():
    e = np.array([[0.1, 0.2], [0.3, 0.4]])
    assert chsh_from_correlators(e)[0, 0] == pytest.approx(0.1 + 0.2 + 0.3 - 0.4)


def test_vertices_no_signaling():
    verts = vertex_boxes()
    assert len(verts) == 24
    assert all(is_no_signaling(v, 1e-12) for v in verts)


@pytest.mark.parametrize("bad", [
    np.full((4, 4), 0.3),
    np.full((3, 4), 0.25),
    [[1.5, -0.5, 0, 0]] + [[0.25] * 4] * 3,
    [[float("nan")] * 4] * 4,
])
def test_box_validation(bad):
    with pytest.raises(InvalidArgument):
        Box(bad)


def test_box_is_immutable():
    box = make_noise()
    with pytest.raises(ValueError):
        box.p[0, 0] = 1.0


def test_json_round_trip():
    box = make_isotropic(0.37)
    again = Box.from_json(box.to_json())
    np.testing.assert_array_equal(again.p, box.p)
    assert json.loads(box.to_json()).keys() == {"p"}


def test_json_rejects_missing_key():
    with pytest.raises(InvalidArgument):
        Box.from_json('{"q": []}')


_family = st.one_of(
    st.integers(0, 7).map(make_pr),
    st.tuples(*[st.integers(0, 1)] * 4).map(lambda b: make_deterministic(*b)),
    st.floats(0, 1).map(make_isotropic),
)


@given(_family, _family, st.floats(0, 1))
def test_mixture_linearity(P, Q, lam):
    mixed = make_slice([(lam, P), (1 - lam, Q)])
    expected = lam * correlators(P).e + (1 - lam) * correlators(Q).e
    np.testing.assert_allclose(correlators(mixed).e, expected, atol=1e-12)


@given(_family)
def test_constructor_outputs_valid(box):
    assert np.all(box.p >= 0) and np.all(box.p <= 1)
    np.testing.assert_allclose(box.p.sum(axis=1), 1.0, atol=1e-12)


def test_random_ns_boxes_are_ns(rng):
    for _ in range(50):
        assert is_no_signaling(random_ns_box(rng), 1e-12)


def test_tsirelson_value():
    g = 1 / math.sqrt(2)
    assert chsh_all(make_isotropic(g))[0, 0] == pytest.approx(2 * math.sqrt(2))
