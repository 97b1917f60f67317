import math

import pytest

from closepair import (
    Clustered,
    GenSpec,
    PointFileError,
    PointSet,
    UniformBox,
    UniformUnitSquare,
    generate,
    parse_distribution,
    read_points,
    write_points,
)


def test_generate_minimum_size():
    ps = generate(GenSpec(n=2, seed=99))
    assert len(ps) == 2


def test_generate_is_deterministic():
    spec = GenSpec(n=500, seed=123, distribution=UniformUnitSquare())
    a = generate(spec)
    b = generate(spec)
    assert a.xs == b.xs and a.ys == b.ys


def test_generate_unit_square_range():
    ps = generate(GenSpec(n=10_000, seed=1))
    assert all(0.0 <= x < 1.0 for x in ps.xs)
    assert all(0.0 <= y < 1.0 for y in ps.ys)


def test_generate_box_range():
    ps = generate(GenSpec(n=2_000, seed=5, distribution=UniformBox(-2.0, -1.0, 10.0, 12.0)))
    assert all(-2.0 <= x < -1.0 for x in ps.xs)
    assert all(10.0 <= y < 12.0 for y in ps.ys)


def test_generate_clustered_spread():
    dist = Clustered(k=1, sigma=1e-4)
    ps = generate(GenSpec(n=400, seed=7, distribution=dist))
    cx = sum(ps.xs) / len(ps)
    cy = sum(ps.ys) / len(ps)
    assert all(abs(x - cx) < 1e-2 for x in ps.xs)
    assert all(abs(y - cy) < 1e-2 for y in ps.ys)
    assert all(math.isfinite(x) for x in ps.xs)


def test_generate_clustered_round_robin_differs_from_uniform():
    clustered = generate(GenSpec(n=100, seed=3, distribution=Clustered(k=4, sigma=0.01)))
    uniform = generate(GenSpec(n=100, seed=3))
    assert clustered.xs != uniform.xs


@pytest.mark.parametrize(
    "spec_kwargs",
    [
        dict(n=1, seed=0),
        dict(n=10, seed=-1),
        dict(n=10, seed=2**64),
    ],
)
def test_genspec_rejects_bad_fields(spec_kwargs):
    with pytest.raises(ValueError):
        GenSpec(**spec_kwargs)


def test_distribution_validation():
    with pytest.raises(ValueError):
        UniformBox(1.0, 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        UniformBox(0.0, math.inf, 0.0, 1.0)
    with pytest.raises(ValueError):
        Clustered(k=0, sigma=0.1)
    with pytest.raises(ValueError):
        Clustered(k=3, sigma=0.0)


def test_parse_distribution_variants():
    assert parse_distribution("unit") == UniformUnitSquare()
    assert parse_distribution("box:0,1,2,3") == UniformBox(0.0, 1.0, 2.0, 3.0)
    assert parse_distribution("clustered:8,0.001") == Clustered(8, 0.001)
    for bad in ("grid", "box:1,2", "clustered:1", "clustered:a,b"):
        with pytest.raises(ValueError):
            parse_distribution(bad)


def test_round_trip_exact(tmp_path):
    ps = generate(GenSpec(n=1000, seed=11))
    path = tmp_path / "pts.txt"
    write_points(ps, str(path))
    back = read_points(str(path))
    assert back == ps
    # re-serialization is byte-identical
    path2 = tmp_path / "pts2.txt"
    write_points(back, str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_read_simple_file(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("0 0\n1 1\n")
    ps = read_points(str(path))
    assert ps.xs == [0.0, 1.0]
    assert ps.ys == [0.0, 1.0]


def test_read_skips_comments_and_blanks(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("# header\n\n0.5 0.25\n# mid\n1.5 -2.5\n\n")
    ps = read_points(str(path))
    assert len(ps) == 2
    assert ps.point(1) == (1.5, -2.5, 1)


def test_read_rejects_non_finite_with_line_number(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("nan 3\n0 0\n1 1\n")
    with pytest.raises(PointFileError, match=r"bad\.txt:1"):
        read_points(str(path))


def test_read_rejects_malformed_with_line_number(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 0\n1 2 3\n")
    with pytest.raises(PointFileError, match=r"bad\.txt:2"):
        read_points(str(path))
    path.write_text("0 0\nx y\n")
    with pytest.raises(PointFileError, match=r"bad\.txt:2.*not a number"):
        read_points(str(path))


def test_read_rejects_single_point(tmp_path):
    path = tmp_path / "one.txt"
    path.write_text("0 0\n")
    with pytest.raises(PointFileError, match="too small"):
        read_points(str(path))


def test_read_missing_file():
    with pytest.raises(PointFileError, match="no-such-file"):
        read_points("no-such-file.txt")


def test_read_stdin(monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("0 0\n0.125 -7.5\n"))
    ps = read_points("-")
    assert ps.xs == [0.0, 0.125]
    assert ps.ys == [0.0, -7.5]


def test_write_stdout(capsys):
    ps = PointSet([(0.1, 0.2), (0.3, 0.4)])
    write_points(ps, "-")
    assert capsys.readouterr().out == "0.1 0.2\n0.3 0.4\n"
