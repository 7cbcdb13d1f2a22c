import json

import pytest

jsonschema = pytest.importorskip("jsonschema")

from halphen.cli import main

from conftest import FIXTURES, SCHEMAS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(payload, schema_name):
    schema = json.loads((SCHEMAS / f"{schema_name}-v1.schema.json").read_text())
    jsonschema.validate(payload, schema)


def fixture(name):
    return str(FIXTURES / f"{name}.ideal")


class TestInvariantsCommand:
    def test_twisted_cubic(self, capsys):
        code, out, err = run(capsys, "invariants", "--ideal", fixture("twisted_cubic"))
        assert code == 0 and err == ""
        payload = json.loads(out)
        validate(payload, "invariants")
        assert payload["hilbert_polynomial"] == "3*m + 1"
        assert payload["degree"] == 3
        assert payload["genus"] == 0
        assert payload["dimension"] == 1

    def test_plane_in_p3_has_no_genus(self, capsys):
        code, out, _ = run(capsys, "invariants", "--ideal", fixture("zero4"))
        payload = json.loads(out)
        validate(payload, "invariants")
        assert payload["dimension"] == 2
        assert "genus" not in payload

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "invariants", "--ideal", "no_such.ideal")
        assert code == 1
        assert "error" in err

    def test_malformed_ideal(self, tmp_path, capsys):
        bad = tmp_path / "bad.ideal"
        bad.write_text("ring x y z\nx^2 + y\n")
        code, _, err = run(capsys, "invariants", "--ideal", str(bad))
        assert code == 1
        assert "inhomogeneous" in err


class TestHilbertCommand:
    def test_csv_values(self, capsys):
        code, out, _ = run(
            capsys, "hilbert", "--ideal", fixture("zero4"), "--max-degree", "2"
        )
        assert code == 0
        assert out == "m,hilbert_function\n0,1\n1,3\n2,6\n"

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys,
            "hilbert",
            "--ideal",
            fixture("twisted_cubic"),
            "--max-degree",
            "4",
            "--format",
            "json",
        )
        payload = json.loads(out)
        validate(payload, "hilbert")
        assert payload["values"] == {"0": 1, "1": 4, "2": 7, "3": 10, "4": 13}

    def test_default_max_degree_reaches_polynomial_regime(self, capsys):
        code, out, _ = run(capsys, "hilbert", "--ideal", fixture("twisted_cubic"))
        rows = out.strip().splitlines()[1:]
        assert len(rows) >= 7  # max(6, m0 + 2) + 1 values


class TestClassifyCommand:
    def test_gap_pair_json(self, capsys):
        code, out, _ = run(capsys, "classify", "4", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "classify")
        assert payload["exists_any"] is False
        assert payload["bounds"]["gruson_peskine_bound"] == "5/3"

    def test_existing_pair_text(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "0")
        assert code == 0
        assert "exists" in out and "does not" not in out

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "three", "0"])
        assert exc.value.code == 2


class TestRegionCommand:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "region", "--dmax", "5")
        assert code == 0
        assert out.startswith("d,g,exists_plane")
        assert "5,4,false,false,false,false,nonexistent" in out

    def test_svg(self, capsys):
        code, out, _ = run(capsys, "region", "--dmax", "4", "--format", "svg")
        assert code == 0
        assert out.startswith("<svg ")


class TestSmoothAtCommand:
    def test_singular_point_on_c0(self, capsys):
        code, out, _ = run(
            capsys, "smooth-at", "--ideal", fixture("c0"), "--point", "1:0:0:0"
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, "smooth-at")
        assert payload["smooth"] is False
        assert payload["jacobian_rank"] == 1
        assert payload["codimension"] == 2

    def test_smooth_point_on_twisted_cubic(self, capsys):
        code, out, _ = run(
            capsys,
            "smooth-at",
            "--ideal",
            fixture("twisted_cubic"),
            "--point",
            "1:0:0:0",
        )
        payload = json.loads(out)
        assert payload["smooth"] is True
        assert payload["jacobian_rank"] == 2

    def test_point_off_variety(self, capsys):
        code, _, err = run(
            capsys, "smooth-at", "--ideal", fixture("c0"), "--point", "1:1:0:0"
        )
        assert code == 1
        assert "not on the variety" in err


class TestTangentCommand:
    def test_plane_cubic(self, capsys):
        code, out, _ = run(
            capsys,
            "tangent",
            "--poly",
            "z*y^2 - x^3 + x*z^2 + z^3",
            "--point",
            "0:1:0",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, "tangent")
        assert payload["line"] == "z = 0"

    def test_singular_point_is_domain_error(self, capsys):
        code, _, err = run(capsys, "tangent", "--poly", "x*y", "--point", "0:0:1")
        assert code == 1
        assert "tangent line undefined" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("invariants", "--ideal", fixture("curve_E")),
            ("hilbert", "--ideal", fixture("c0"), "--max-degree", "5", "--format", "json"),
            ("classify", "7", "5", "--json"),
            ("region", "--dmax", "6"),
            ("region", "--dmax", "5", "--format", "svg"),
            ("smooth-at", "--ideal", fixture("c0"), "--point", "1:0:0:0"),
            ("tangent", "--poly", "x^2 + y^2 - z^2", "--point", "1:0:1"),
        ],
    )
    def test_byte_identical_reruns(self, capsys, argv):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert first[0] == 0
