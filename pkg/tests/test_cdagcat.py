import numpy as np
import pytest

from pivotfun import matkernel as mk
from pivotfun.cdagcat import (
    CMor,
    conjugate_mor,
    dagger_mor,
    dim_obj,
    dual_obj,
    fhilb,
    ghilb,
    identity,
    is_grade_preserving,
    nested_duality,
    sliding_residuals,
    standard_duality,
    tensor_mor,
    tensor_obj,
    trace_mor,
    transpose_mor,
    verify_duality,
    compose,
)
from pivotfun.errors import InstanceMismatchError, ShapeMismatchError


def random_mor(rng, x, y):
    return CMor(x, y, mk.random_matrix(rng, y.total_dim, x.total_dim))


def test_tensor_fhilb_dims():
    assert tensor_obj(fhilb(2), fhilb(3)).dim == 6


def test_tensor_ghilb_delta_convolution(z2):
    x = ghilb(z2, [1, 0])
    y = ghilb(z2, [0, 1])
    assert tensor_obj(x, y).multiplicities() == [0, 1]


def test_tensor_ghilb_full_convolution(z2):
    # oracle: brute-force convolution over all 4 grade pairs
    x = ghilb(z2, [1, 1])
    expected = [0, 0]
    for g in range(2):
        for h in range(2):
            expected[z2.mul(g, h)] += 1
    assert tensor_obj(x, x).multiplicities() == expected == [2, 2]


def test_tensor_instance_mismatch(z2):
    with pytest.raises(InstanceMismatchError):
        tensor_obj(fhilb(2), ghilb(z2, [1, 1]))


def test_standard_duality_dim_one(tol):
    w = standard_duality(fhilb(1))
    assert np.array_equal(w.cup.mat, [[1.0]])
    assert np.array_equal(w.cap.mat, [[1.0]])
    assert verify_duality(w, tol).passed


def test_right_trace_of_identity_is_dimension(tol):
    # oracle: contract cup against cap directly
    for n in range(1, 6):
        w = standard_duality(fhilb(n))
        direct = w.cap.mat @ dagger_mor(w.cap).mat
        assert abs(direct[0, 0] - n) <= tol.eps
        assert abs(trace_mor(identity(fhilb(n)), w) - n) <= tol.eps
        assert abs(dim_obj(fhilb(n)) - n) <= tol.eps


def test_ghilb_dual_inverse_grading(z3):
    x = ghilb(z3, [1, 0, 0])
    assert dual_obj(x).multiplicities() == [1, 0, 0]
    y = ghilb(z3, [0, 1, 0])
    assert dual_obj(y).multiplicities() == [0, 0, 1]


def test_verify_duality_standard_residual_zero(tol, z2):
    for x in (fhilb(4), ghilb(z2, [2, 1])):
        rep = verify_duality(standard_duality(x), tol)
        assert rep.passed and rep.max_residual == 0.0


def test_verify_duality_scaled_cup_fails_snake(tol):
    w = standard_duality(fhilb(3))
    bad = type(w)(w.obj, w.dual,
                  CMor(w.cup.dom, w.cup.cod, 2 * w.cup.mat), w.cap)
    rep = verify_duality(bad, tol)
    by = {c.name: c for c in rep.checks}
    # snake composite equals 2 id, normalised residual 1
    assert abs(by["snake_right"].residual - 1.0) <= 1e-12
    assert by["snake_right"].status == "fail"


def test_verify_duality_compensated_scaling_fails_dagger(tol):
    w = standard_duality(fhilb(3))
    bad = type(w)(w.obj, w.dual,
                  CMor(w.cup.dom, w.cup.cod, 2 * w.cup.mat),
                  CMor(w.cap.dom, w.cap.cod, 0.5 * w.cap.mat))
    rep = verify_duality(bad, tol)
    by = {c.name: c for c in rep.checks}
    assert by["snake_right"].status == "pass"
    assert by["snake_left"].status == "pass"
    assert by["dagger_cup"].status == "fail"
    assert by["dagger_cap"].status == "fail"


def test_transpose_identity(tol):
    w = standard_duality(fhilb(3))
    t = transpose_mor(identity(fhilb(3)), w, w)
    assert tol.residual(t.mat, np.eye(3)) <= tol.eps


def test_transpose_is_matrix_transpose(rng, tol):
    # oracle: expand the cup/cap contraction entrywise
    w = standard_duality(fhilb(2))
    f = random_mor(rng, fhilb(2), fhilb(2))
    t = transpose_mor(f, w, w)
    assert tol.residual(t.mat, f.mat.T) <= tol.eps
    a, b, c, d = f.mat.reshape(-1)
    assert tol.residual(t.mat, np.array([[a, c], [b, d]])) <= tol.eps


def test_double_transpose_is_identity(rng, tol):
    wx, wy = standard_duality(fhilb(2)), standard_duality(fhilb(3))
    f = random_mor(rng, fhilb(2), fhilb(3))
    tt = transpose_mor(transpose_mor(f, wx, wy), wy, wx)
    assert tol.residual(tt.mat, f.mat) <= tol.eps


def test_conjugate_examples(rng, tol):
    w = standard_duality(fhilb(2))
    real = CMor(fhilb(2), fhilb(2), np.array([[1.0, 2.0], [3.0, 4.0]]))
    assert tol.residual(conjugate_mor(real, w, w).mat, real.mat) <= tol.eps
    w1 = standard_duality(fhilb(1))
    i_mor = CMor(fhilb(1), fhilb(1), np.array([[1j]]))
    assert tol.residual(conjugate_mor(i_mor, w1, w1).mat, [[-1j]]) <= tol.eps
    f = random_mor(rng, fhilb(3), fhilb(3))
    lhs = dagger_mor(transpose_mor(f, w3 := standard_duality(fhilb(3)), w3)).mat
    rhs = transpose_mor(dagger_mor(f), w3, w3).mat
    assert tol.residual(lhs, rhs) <= tol.eps


def test_trace_examples(rng, tol):
    w = standard_duality(fhilb(3))
    f = CMor(fhilb(3), fhilb(3), np.diag([1.0, 2.0, 3.0]))
    assert abs(trace_mor(f, w, "right") - 6.0) <= tol.eps
    for _ in range(5):
        g = random_mor(rng, fhilb(3), fhilb(3))
        tr_r = trace_mor(g, w, "right")
        tr_l = trace_mor(g, w, "left")
        assert abs(tr_r - tr_l) <= tol.eps
        assert abs(tr_r - np.trace(g.mat)) <= tol.eps


def test_sliding_identities_seeded(rng, tol, z2):
    spaces = [(fhilb(2), fhilb(3)), (fhilb(4), fhilb(2)),
              (ghilb(z2, [1, 1]), ghilb(z2, [2, 1]))]
    for x, y in spaces:
        wx, wy = standard_duality(x), standard_duality(y)
        for _ in range(10):
            f = random_mor(rng, x, y)
            for name, res in sliding_residuals(f, wx, wy, tol).items():
                assert res <= tol.eps, name


def test_nested_duality_passes(rng, tol, z2):
    pairs = [(fhilb(2), fhilb(3)), (ghilb(z2, [1, 1]), ghilb(z2, [1, 0]))]
    for x, y in pairs:
        w = nested_duality(standard_duality(x), standard_duality(y))
        assert verify_duality(w, tol).passed


def test_grading_closure(rng, tol, z2):
    x = ghilb(z2, [1, 1])
    y = ghilb(z2, [2, 1])
    # grade-preserving morphism built blockwise
    mat = np.zeros((3, 2), dtype=complex)
    mat[0, 0] = rng.standard_normal()
    mat[1, 0] = rng.standard_normal()
    mat[2, 1] = rng.standard_normal()
    f = CMor(x, y, mat)
    assert is_grade_preserving(f, tol)[0]
    assert is_grade_preserving(tensor_mor(f, f), tol)[0]
    assert is_grade_preserving(dagger_mor(f), tol)[0]
    wx, wy = standard_duality(x), standard_duality(y)
    assert is_grade_preserving(transpose_mor(f, wx, wy), tol)[0]
    g = CMor(y, x, mat.conj().T)
    assert is_grade_preserving(compose(f, g), tol)[0]
    bad = CMor(x, y, np.ones((3, 2)))
    assert not is_grade_preserving(bad, tol)[0]


def test_shape_mismatch_raises(z2):
    with pytest.raises(ShapeMismatchError):
        CMor(fhilb(2), fhilb(2), np.eye(3))
