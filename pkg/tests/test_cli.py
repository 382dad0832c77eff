"""Command-line interface tests: parsing, exit codes, output formats,
and golden-file comparisons for every subcommand."""

from __future__ import annotations

from pathlib import Path

import pytest

from latticepick import LatticePoint, verify_pick
from latticepick.cli import (
    EXIT_GUARD,
    EXIT_INTERNAL,
    EXIT_INVALID_POLYGON,
    EXIT_IO,
    EXIT_OK,
    EXIT_PARSE,
    PolygonParseError,
    main,
    parse_polygon,
)

P = LatticePoint
DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def polygon_files() -> list[Path]:
    files = sorted(DATA.glob("*.txt")) + sorted(DATA.glob("*.json"))
    assert len(files) >= 10
    return files


class TestParsePlain:
    def test_basic(self):
        doc = parse_polygon("0 0\n2 0\n2 2\n0 2\n")
        assert doc.format == "plain"
        assert doc.vertices == (P(0, 0), P(2, 0), P(2, 2), P(0, 2))

    def test_comments_and_blank_lines(self):
        text = "# a square\n\n0 0\n2 0  # bottom right\n\n2 2\n0 2\n"
        doc = parse_polygon(text)
        assert len(doc.vertices) == 4

    def test_negative_coordinates(self):
        doc = parse_polygon("-1 -1\n1 -1\n0 1\n")
        assert doc.vertices[0] == P(-1, -1)

    def test_wrong_token_count(self):
        with pytest.raises(PolygonParseError) as exc_info:
            parse_polygon("0 0\n1 2 3\n0 1\n")
        assert exc_info.value.line == 2

    def test_non_integer_token(self):
        with pytest.raises(PolygonParseError) as exc_info:
            parse_polygon("0 0\n1 2.5\n0 1\n")
        assert exc_info.value.line == 2
        assert exc_info.value.column == 3

    def test_reports_position_in_message(self):
        with pytest.raises(PolygonParseError, match=r"line 2"):
            parse_polygon("0 0\nx 0\n0 1\n")


class TestParseStructured:
    def test_basic(self):
        doc = parse_polygon("[[0, 0], [2, 0], [2, 2], [0, 2]]")
        assert doc.format == "structured"
        assert doc.vertices == (P(0, 0), P(2, 0), P(2, 2), P(0, 2))

    def test_rejects_floats(self):
        with pytest.raises(PolygonParseError, match="element 1"):
            parse_polygon("[[0, 0], [1.5, 0], [0, 1]]", fmt="structured")

    def test_rejects_booleans(self):
        with pytest.raises(PolygonParseError, match="element 0"):
            parse_polygon("[[true, 0], [1, 0], [0, 1]]", fmt="structured")

    def test_rejects_non_pairs(self):
        with pytest.raises(PolygonParseError, match="element 2"):
            parse_polygon("[[0, 0], [1, 0], [0, 1, 7]]", fmt="structured")

    def test_rejects_non_array_top_level(self):
        with pytest.raises(PolygonParseError, match="top-level"):
            parse_polygon('{"vertices": []}', fmt="structured")

    def test_syntax_error_carries_position(self):
        with pytest.raises(PolygonParseError) as exc_info:
            parse_polygon("[[0, 0], [1, 0],", fmt="structured")
        assert exc_info.value.line is not None

    def test_auto_sniffs_bracket(self):
        doc = parse_polygon("  [[0,0],[1,0],[0,1]]")
        assert doc.format == "structured"

    def test_auto_sniffs_json_extension(self):
        doc = parse_polygon("[[0,0],[1,0],[0,1]]", source="poly.json")
        assert doc.format == "structured"


class TestExitCodes:
    def test_ok(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n1 0\n0 1\n")
        assert main(["area", str(f)]) == EXIT_OK

    def test_missing_file(self, capsys):
        assert main(["area", "/nonexistent/poly.txt"]) == EXIT_IO

    def test_parse_error(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\nbad line here\n")
        assert main(["area", str(f)]) == EXIT_PARSE

    def test_invalid_polygon(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 2\n2 0\n0 2\n")
        assert main(["pick", str(f)]) == EXIT_INVALID_POLYGON

    def test_guard(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n1000 0\n0 1000\n")
        assert main(["count", str(f), "--max-box-points", "100"]) == EXIT_GUARD

    def test_unknown_command(self, capsys):
        assert main(["frobnicate", "x.txt"]) == EXIT_PARSE

    def test_missing_argument(self, capsys):
        assert main(["area"]) == EXIT_PARSE

    def test_format_mismatch(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n1 0\n0 1\n")
        assert main(["area", str(f), "--format", "structured"]) == EXIT_PARSE

    def test_distinct_codes(self):
        codes = {EXIT_OK, EXIT_IO, EXIT_PARSE, EXIT_INVALID_POLYGON,
                 EXIT_GUARD, EXIT_INTERNAL}
        assert codes == {0, 1, 2, 3, 4, 5}

    @pytest.mark.parametrize("name,code", [
        ("bowtie.txt", EXIT_INVALID_POLYGON),
        ("repeated.txt", EXIT_INVALID_POLYGON),
        ("bad_number.txt", EXIT_PARSE),
    ])
    def test_invalid_fixtures(self, name, code, capsys):
        assert main(["pick", str(DATA / "invalid" / name)]) == code


class TestOutputs:
    def run(self, capsys, *argv) -> str:
        assert main(list(argv)) == EXIT_OK
        return capsys.readouterr().out

    def test_area_even(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        assert self.run(capsys, "area", str(f)) == "twice_area=8\narea=4\n"

    def test_area_half_integral(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n1 0\n0 1\n")
        assert self.run(capsys, "area", str(f)) == "twice_area=1\narea=1/2\n"

    def test_count(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        assert self.run(capsys, "count", str(f)) == "interior=1 boundary=8\n"

    def test_pick(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        assert self.run(capsys, "pick", str(f)) == \
            "interior=1 boundary=8 twice_area=8 OK\n"

    def test_triangulate_line_count(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        out = self.run(capsys, "triangulate", str(f))
        lines = out.splitlines()
        assert len(lines) == 8
        for line in lines:
            assert len(line.split()) == 6
            int_coords = [int(tok) for tok in line.split()]
            assert all(-4 <= v <= 4 for v in int_coords)

    def test_triangulate_events(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        plain = self.run(capsys, "triangulate", str(f))
        with_events = self.run(capsys, "triangulate", str(f), "--events")
        assert with_events.startswith(plain)
        assert "event 1 " in with_events
        assert "  parent " in with_events
        assert "  child " in with_events

    def test_pick_output_matches_library(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n5 0\n6 4\n2 7\n-2 3\n")
        out = self.run(capsys, "pick", str(f))
        counts = verify_pick(parse_polygon(f.read_text()).polygon)
        assert out == (f"interior={counts.interior} "
                       f"boundary={counts.boundary} "
                       f"twice_area={counts.twice_area} OK\n")

    def test_svg_structure(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n2 0\n2 2\n0 2\n")
        out_file = tmp_path / "p.svg"
        assert main(["svg", str(f), "-o", str(out_file)]) == EXIT_OK
        text = out_file.read_text()
        assert text.startswith("<svg ")
        assert text.rstrip().endswith("</svg>")
        # 8 primitive triangles plus the outline
        assert text.count("<polygon") == 9
        # 8 boundary markers (filled) + 1 interior marker (hollow)
        assert text.count("<circle") == 9

    def test_svg_deterministic(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n5 0\n6 4\n2 7\n-2 3\n")
        out1 = tmp_path / "a.svg"
        out2 = tmp_path / "b.svg"
        assert main(["svg", str(f), "-o", str(out1)]) == EXIT_OK
        assert main(["svg", str(f), "-o", str(out2)]) == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()

    def test_svg_coordinates_are_integers(self, tmp_path, capsys):
        f = tmp_path / "p.txt"
        f.write_text("0 0\n5 0\n6 4\n2 7\n-2 3\n")
        out_file = tmp_path / "p.svg"
        assert main(["svg", str(f), "-o", str(out_file)]) == EXIT_OK
        assert "." not in out_file.read_text().replace(
            "http://www.w3.org/2000/svg", "")


class TestGoldenCorpus:
    """Byte-exact comparison against checked-in outputs for the whole
    sample corpus; regenerate with tests/regen_golden.py after any
    intentional output change."""

    @pytest.mark.parametrize("path", polygon_files(),
                             ids=lambda p: p.stem)
    def test_stdout_commands(self, path, capsys):
        for command, argv in [
            ("area", ["area", str(path)]),
            ("count", ["count", str(path)]),
            ("pick", ["pick", str(path)]),
            ("triangulate", ["triangulate", str(path), "--events"]),
        ]:
            assert main(argv) == EXIT_OK
            out = capsys.readouterr().out
            expected = (GOLDEN / path.stem / f"{command}.txt").read_text()
            assert out == expected, f"{command} output drifted for {path.name}"

    @pytest.mark.parametrize("path", polygon_files(),
                             ids=lambda p: p.stem)
    def test_svg_command(self, path, tmp_path):
        out_file = tmp_path / "render.svg"
        assert main(["svg", str(path), "-o", str(out_file)]) == EXIT_OK
        expected = (GOLDEN / path.stem / "render.svg").read_bytes()
        assert out_file.read_bytes() == expected

    @pytest.mark.parametrize("path", polygon_files(),
                             ids=lambda p: p.stem)
    def test_triangle_count_matches_area(self, path, capsys):
        assert main(["area", str(path)]) == EXIT_OK
        twice_area = int(capsys.readouterr().out.splitlines()[0]
                         .removeprefix("twice_area="))
        assert main(["triangulate", str(path)]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == twice_area
