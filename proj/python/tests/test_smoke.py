import math

import numpy as np
import pytest

import spectral_ssr as ssr


def two_blobs(per=20, gap=10.0, seed=0):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(per, 2))
    b = rng.normal(size=(per, 2)) + [gap, 0.0]
    return np.vstack([a, b]), [0] * per + [1] * per


def test_path_laplacian_spectrum():
    w = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
    values, vectors = ssr.sym_eig(ssr.laplacian(w), 3)
    assert np.allclose(values, [0.0, 1.0, 3.0], atol=1e-12)
    assert np.allclose(vectors @ vectors.T, np.eye(3), atol=1e-12)


def test_svd_reconstructs():
    a = np.random.default_rng(1).normal(size=(5, 8))
    u, s, v = ssr.compact_svd(a)
    assert np.allclose(u @ np.diag(s) @ v, a, atol=1e-10)
    assert np.allclose(s, np.linalg.svd(a, compute_uv=False), atol=1e-10)


def test_nscrt_recovers_rotation():
    x, r_true, _ = ssr.recovery_instance(r=4, n=256, seed=3)
    codes = ssr.nscrt(x)
    assert ssr.rotation_recovery_score(codes.rotation, r_true) > 0.999
    trace = codes.objective_trace
    assert all(b <= a + 1e-9 for a, b in zip(trace, trace[1:]))


def test_ssrk_separates_blobs():
    samples, truth = two_blobs()
    w = ssr.knn_similarity(samples, 5)
    report = ssr.rho(w, 2)
    assert report.rho == pytest.approx(1.0)
    codes = ssr.ssrk(w, 2)
    assert ssr.accuracy(codes.labels(), truth) == 1.0
    assert ssr.accuracy(ssr.rcut(w, 2), truth) == 1.0


def test_iris_pipelines():
    samples, labels, names = ssr.load_iris()
    assert samples.shape == (150, 4)
    assert len(names) == 3
    pred, centers, objective = ssr.kmeans(samples, 3)
    assert centers.shape == (3, 4)
    assert ssr.accuracy(pred, labels) > 0.85
    assert 0.0 < ssr.nmi(pred, labels) <= 1.0
    codes = ssr.ssro(samples - samples.mean(axis=0), 3)
    assert ssr.accuracy(codes.labels(), labels) > 0.6


def test_metrics_hand_values():
    cols, cost = ssr.hungarian(np.array([[4.0, 1.0, 3.0], [2.0, 0.0, 5.0], [3.0, 2.0, 2.0]]))
    assert cost == 5.0
    assert sorted(cols) == [0, 1, 2]
    assert ssr.rand_index([0, 0, 1, 1], [0, 1, 0, 1]) == pytest.approx(1.0 / 3.0)
    assert ssr.sparsity(np.array([1.0, 0.0, 0.0])) == pytest.approx(1.0)
    assert ssr.spearman([1, 2, 3], [10, 20, 30]) == pytest.approx(1.0)
    assert ssr.default_lambda(16) == pytest.approx(0.15)


def test_sweeps_small():
    rows = ssr.rho_sweep([16.0], trials=3)
    assert rows[0]["rho"] == pytest.approx(1.0)
    assert rows[0]["scut_accuracy"] == 1.0
    rows = ssr.recovery_sweep([1.0 / 32], trials=1)
    assert {row["profile"] for row in rows} == {"uniform", "exponential"}
    assert all(math.isfinite(row["mean_score"]) for row in rows)


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        ssr.nscrt(np.ones((2, 4)))
    with pytest.raises(OSError):
        ssr.load_csv("/nonexistent/file.csv")
    with pytest.raises(ValueError):
        ssr.gaussian_preset("nope")
