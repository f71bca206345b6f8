import numpy as np
import pytest

from splinequad import (greville_points, make_from_knots,
                        make_symmetric_chebyshev, make_uniform, mesh_ratio,
                        read_knots_file)


def random_partition(rng, n, ratio_decades=1.0, a=0.0, b=1.0):
    h = 10.0 ** rng.uniform(0.0, ratio_decades, n)
    knots = np.concatenate([[0.0], np.cumsum(h)])
    return make_from_knots(a + (b - a) * knots / knots[-1])


def test_uniform_basic():
    p = make_uniform(0, 1, 4)
    assert p.knots.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert p.n == 4 and p.a == 0.0 and p.b == 1.0


def test_uniform_single_interval():
    p = make_uniform(0, 1, 1)
    assert p.knots.tolist() == [0.0, 1.0]
    assert greville_points(p).tolist() == [0.0, 0.5, 1.0]


def test_uniform_example3_grid():
    p = make_uniform(-1, 1, 256)
    assert p.steplengths[0] == 2.0 / 256
    assert p.knots[-1] == 1.0 and p.knots[0] == -1.0


def test_uniform_validation():
    with pytest.raises(ValueError, match='invalid interval'):
        make_uniform(1, 1, 4)
    with pytest.raises(ValueError, match='invalid interval'):
        make_uniform(2, 1, 4)
    with pytest.raises(ValueError, match='invalid size'):
        make_uniform(0, 1, 0)


def test_from_knots_remark_steplengths():
    p = make_from_knots([-1, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0])
    assert p.n == 7
    np.testing.assert_allclose(
        p.steplengths, [0.1, 0.6, 0.1, 0.7, 0.1, 0.35, 0.05], rtol=1e-14)


def test_from_knots_two_points():
    p = make_from_knots([0.0, 1.0])
    assert p.n == 1 and p.steplengths.tolist() == [1.0]


def test_from_knots_rejects_duplicates():
    with pytest.raises(ValueError, match='index 2'):
        make_from_knots([0.0, 0.5, 0.5, 1.0])
    with pytest.raises(ValueError, match='at least 2'):
        make_from_knots([0.0])


def test_chebyshev_small_cases():
    p = make_symmetric_chebyshev(-1, 1, 2)
    np.testing.assert_allclose(p.knots, [-1.0, 0.0, 1.0], atol=1e-16)
    p = make_symmetric_chebyshev(-1, 1, 4)
    s = np.sqrt(2.0) / 2.0
    np.testing.assert_allclose(p.knots, [-1.0, -s, 0.0, s, 1.0], atol=1e-15)


def test_chebyshev_midpoint_symmetry():
    for n in (3, 4, 7, 16, 33):
        p = make_symmetric_chebyshev(0.0, 1.0, n)
        x = p.knots
        assert np.max(np.abs(x + x[::-1] - 1.0)) <= 1e-14


def test_greville_points():
    p = make_uniform(0, 1, 4)
    assert greville_points(p).tolist() == [0.0, 0.125, 0.375, 0.625, 0.875, 1.0]
    p7 = make_from_knots([-1, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0])
    np.testing.assert_allclose(
        greville_points(p7),
        [-1.0, -0.95, -0.6, -0.25, 0.15, 0.55, 0.775, 0.975, 1.0], rtol=1e-14)


def test_greville_shape_and_monotonicity():
    rng = np.random.default_rng(3)
    for _ in range(30):
        p = random_partition(rng, int(rng.integers(1, 40)))
        th = greville_points(p)
        assert len(th) == p.n + 2
        assert np.all(np.diff(th) > 0)
        assert th[0] == p.a and th[-1] == p.b


def test_steplengths_sum():
    rng = np.random.default_rng(11)
    for _ in range(50):
        p = random_partition(rng, int(rng.integers(1, 60)), ratio_decades=2.0)
        width = p.b - p.a
        assert abs(p.steplengths.sum() - width) <= 1e-14 * width


def test_mesh_ratio():
    assert mesh_ratio(make_uniform(0, 1, 17)) == 1.0
    assert mesh_ratio(make_from_knots([0.0, 1.0])) == 1.0
    assert mesh_ratio(make_from_knots([0.0, 1.0, 3.0])) == 2.0
    p7 = make_from_knots([-1, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0])
    assert abs(mesh_ratio(p7) - 7.0) <= 1e-12
    rng = np.random.default_rng(5)
    for _ in range(20):
        assert mesh_ratio(random_partition(rng, int(rng.integers(2, 30)))) >= 1.0


def test_partition_is_immutable():
    p = make_uniform(0, 1, 5)
    with pytest.raises(ValueError):
        p.knots[0] = 3.0
    with pytest.raises(ValueError):
        p.greville[1] = 3.0


def test_read_knots_file(tmp_path):
    path = tmp_path / 'knots.txt'
    path.write_text('# comment line\n0\n0.25\n\n0.5\n0.75\n1.0\n')
    p = read_knots_file(str(path))
    assert p.knots.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]

    bad = tmp_path / 'bad.txt'
    bad.write_text('0\nnot-a-number\n1\n')
    with pytest.raises(ValueError, match='bad.txt:2'):
        read_knots_file(str(bad))

    short = tmp_path / 'short.txt'
    short.write_text('0.5\n')
    with pytest.raises(ValueError, match='at least 2'):
        read_knots_file(str(short))
