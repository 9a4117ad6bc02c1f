import json
from fractions import Fraction

import pytest

from semifree.cli import main, parse_document
from semifree.cube import all_subsets, alpha_class, restrict_class
from semifree.errors import InputError

HYPERCUBE_3 = """
# the model datum in dimension 6
n = 3
point p   weights  1  1  1 moment -3/2
point p1  weights -1  1  1 moment -1/2
point p2  weights  1 -1  1 moment -1/2
point p3  weights  1  1 -1 moment -1/2
point p12 weights -1 -1  1 moment 1/2
point p13 weights -1  1 -1 moment 1/2
point p23 weights  1 -1 -1 moment 1/2
point p123 weights -1 -1 -1 moment 3/2
"""

REMARK_PAIR = """
n = 3
point A weights 1 1 -2
point B weights -1 -1 2
"""

BAD_PAIR = """
n = 3
point A weights 1 1 -1
point B weights -1 -1 1
"""


@pytest.fixture
def cube_file(tmp_path):
    f = tmp_path / "cube.txt"
    f.write_text(HYPERCUBE_3)
    return str(f)


class TestParser:
    def test_round_trip(self):
        data = parse_document(HYPERCUBE_3)
        assert data.n == 3
        assert len(data.points) == 8
        assert data.semifree
        assert data.point("p12").moment_value == Fraction(1, 2)

    def test_moment_optional(self):
        data = parse_document(REMARK_PAIR)
        assert data.point("A").moment_value is None

    def test_missing_n(self):
        with pytest.raises(InputError):
            parse_document("point A weights 1\n")

    def test_bad_weight(self):
        with pytest.raises(InputError):
            parse_document("n = 1\npoint A weights x\n")

    def test_bad_rational(self):
        with pytest.raises(InputError):
            parse_document("n = 1\npoint A weights 1 moment 1/0\n")


class TestExitCodes:
    def test_check_pass(self, cube_file):
        assert main(["check", cube_file]) == 0

    def test_check_remark_pair_passes(self, tmp_path):
        f = tmp_path / "pair.txt"
        f.write_text(REMARK_PAIR)
        assert main(["check", str(f)]) == 0

    def test_check_constraint_failure(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text(BAD_PAIR)
        assert main(["check", str(f)]) == 1

    def test_malformed_file(self, tmp_path):
        f = tmp_path / "junk.txt"
        f.write_text("nonsense\n")
        assert main(["check", str(f)]) == 2

    def test_missing_file(self):
        assert main(["check", "/nonexistent/path.txt"]) == 2

    def test_validation_error_is_input_error(self, tmp_path):
        f = tmp_path / "zero.txt"
        f.write_text("n = 2\npoint A weights 1 0\n")
        assert main(["check", str(f)]) == 2


class TestCommands:
    def test_count(self, capsys):
        assert main(["count", "--n", "3"]) == 0
        assert capsys.readouterr().out.strip() == "1 3 3 1"

    def test_count_n6(self, capsys):
        main(["count", "--n", "6"])
        assert capsys.readouterr().out.strip() == "1 6 15 20 15 6 1"

    def test_ring_text(self, capsys):
        assert main(["ring", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "alpha_12" in out
        assert "c2" in out

    def test_ring_structured_round_trip(self, capsys):
        assert main(["ring", "--n", "2", "--format", "structured"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 2
        # re-restrict every basis class and compare with the emitted table
        subsets = all_subsets(2)
        for row in doc["basis"]:
            J = frozenset(row["subset"])
            recomputed = [str(restrict_class(alpha_class(J), Jp)) for Jp in subsets]
            assert recomputed == row["restrictions"]

    def test_solve(self, cube_file, capsys):
        assert main(["solve", cube_file]) == 0
        out = capsys.readouterr().out
        assert "p123 -> {1, 2, 3}" in out
        assert "isomorphic" in out

    def test_solve_count_mismatch(self, tmp_path, capsys):
        f = tmp_path / "pair.txt"
        f.write_text("n = 2\npoint A weights 1 1\npoint B weights -1 -1\n")
        assert main(["solve", str(f)]) == 1

    def test_reduce_model(self, capsys):
        assert main(["reduce", "--n", "3", "--c", "3/2"]) == 0
        out = capsys.readouterr().out
        assert "betti: 1 4 1" in out
        assert "euler characteristic: 6" in out

    def test_reduce_from_file(self, cube_file, capsys):
        assert main(["reduce", cube_file]) == 0
        assert "betti: 1 4 1" in capsys.readouterr().out

    def test_search(self, capsys):
        assert main(
            ["search", "--n", "3", "--points", "2", "--bound", "2", "--degree", "3"]
        ) == 0
        out = capsys.readouterr().out
        assert "(-2,1,1)  (-1,-1,2)" in out
