"""Plot script tests: golden CSV fixtures in, image files out.

The script under test lives in scripts/ and is loaded by path, since it is a
companion artifact rather than part of the installed package.
"""

import importlib.util
import pathlib
import sys

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
SCRIPT = pathlib.Path(__file__).parent.parent / "scripts" / "plots.py"


def _load_plots():
    spec = importlib.util.spec_from_file_location("plots", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    sys.modules.setdefault("plots", module)
    spec.loader.exec_module(module)
    return module


plots = _load_plots()


PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class TestRendering:
    @pytest.mark.parametrize(
        "kind,fixture",
        [
            ("spiral", "spiral.csv"),
            ("correlation", "sample.csv"),
            ("chsh", "chsh_summary.csv"),
        ],
    )
    def test_each_kind_renders(self, tmp_path, kind, fixture):
        out = tmp_path / f"{kind}.png"
        assert plots.main([kind, str(FIXTURES / fixture), str(out)]) == 0
        assert out.read_bytes().startswith(PNG_MAGIC)
        assert out.stat().st_size > 1000

    def test_svg_output(self, tmp_path):
        out = tmp_path / "spiral.svg"
        assert plots.main(["spiral", str(FIXTURES / "spiral.csv"), str(out)]) == 0
        assert b"<svg" in out.read_bytes()

    def test_input_is_untouched(self, tmp_path):
        src = FIXTURES / "chsh_summary.csv"
        before = src.read_bytes()
        assert plots.main(["chsh", str(src), str(tmp_path / "x.png")]) == 0
        assert src.read_bytes() == before


class TestSchemaErrors:
    def test_missing_column_is_named(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("index,mirror_x,phase,cum_re\n0,0.0,0.0,1.0\n")
        assert plots.main(["spiral", str(bad), str(tmp_path / "x.png")]) == 1
        err = capsys.readouterr().err
        assert "cum_im" in err

    def test_empty_file(self, tmp_path, capsys):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        assert plots.main(["spiral", str(empty), str(tmp_path / "x.png")]) == 1
        assert "empty" in capsys.readouterr().err

    def test_header_only(self, tmp_path, capsys):
        hdr = tmp_path / "hdr.csv"
        hdr.write_text("source,s_value,ci\n")
        assert plots.main(["chsh", str(hdr), str(tmp_path / "x.png")]) == 1
        assert "no data rows" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert plots.main(["chsh", str(tmp_path / "nope.csv"), str(tmp_path / "x.png")]) == 1

    def test_unknown_kind_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            plots.main(["sankey", str(FIXTURES / "spiral.csv"), str(tmp_path / "x.png")])
        assert exc.value.code == 2

    def test_wrong_fixture_for_kind(self, tmp_path, capsys):
        assert plots.main(["chsh", str(FIXTURES / "spiral.csv"), str(tmp_path / "x.png")]) == 1
        assert "source" in capsys.readouterr().err
