import pytest

from hullkit import PointSet
from hullkit.baselines import monotone_chain
from hullkit.datagen import Distribution, generate
from hullkit.pointio import read_hull, read_points, write_hull, write_points


def test_roundtrip(tmp_path):
    ps = generate(Distribution.GAUSS_DISK, 500, 3)
    path = tmp_path / "pts.txt"
    write_points(path, ps)
    back = read_points(path)
    assert back.pairs() == ps.pairs()


def test_byte_identical_rewrites(tmp_path):
    ps = generate(Distribution.SQUARE, 10**4, 8)
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    write_points(a, ps)
    write_points(b, generate(Distribution.SQUARE, 10**4, 8))
    assert a.read_bytes() == b.read_bytes()


def test_comments_blank_lines_and_scientific(tmp_path):
    path = tmp_path / "pts.txt"
    path.write_text("# header\n\n1.5 -2.25\n  3e-4 1E2\n# trailing\n")
    ps = read_points(path)
    assert ps.pairs() == [(1.5, -2.25), (0.0003, 100.0)]


def test_malformed_line_reports_position(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2\n3\n")
    with pytest.raises(ValueError, match="bad.txt:2"):
        read_points(path)
    path.write_text("1 x\n")
    with pytest.raises(ValueError, match="bad.txt:1"):
        read_points(path)


def test_non_finite_rejected(tmp_path):
    path = tmp_path / "inf.txt"
    path.write_text("0 0\ninf 1\n")
    with pytest.raises(ValueError, match="finite"):
        read_points(path)


def test_hull_file_roundtrip(tmp_path):
    ps = generate(Distribution.DISK, 200, 5)
    hull = monotone_chain(ps)
    path = tmp_path / "hull.txt"
    write_hull(path, hull)
    assert read_hull(path) == list(hull)
    lines = path.read_text().splitlines()
    assert all(line.strip().isdigit() for line in lines)
