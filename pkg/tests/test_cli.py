import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DIAGNOSIS, SUPPLIERS
from ifsim import IndicatorKind, InputValidationError, ParseError
from ifsim.cli import main, run_compare, run_diagnose, run_rank
from ifsim.fileio import InputDocument, parse_input, render_input, round4


def _doc(**overrides):
    doc = json.loads(SUPPLIERS.read_text())
    doc.update(overrides)
    return doc


def _violations(doc) -> list[str]:
    with pytest.raises(InputValidationError) as info:
        parse_input(json.dumps(doc))
    return info.value.violations


class TestParse:
    def test_supplier_document(self):
        doc = parse_input(SUPPLIERS.read_bytes())
        matrix = doc.to_decision_matrix()
        assert len(matrix.alternatives) == 5
        assert len(matrix.indicators) == 4
        assert matrix.kinds == (
            IndicatorKind.BENEFIT, IndicatorKind.BENEFIT, IndicatorKind.COST, IndicatorKind.BENEFIT
        )
        assert matrix.weights.weights == (0.3, 0.3, 0.2, 0.2)

    def test_invalid_pair_is_located(self):
        doc = _doc()
        doc["rows"][0]["values"][1] = [0.7, 0.5]
        [v] = _violations(doc)
        assert "mu+nu = 1.2 > 1" in v and "row A1" in v and "col C2" in v

    def test_all_violations_aggregated(self):
        doc = _doc(weights=[0.5, 0.5, 0.5, 0.5], indicator_kinds=["benefit", "gain", "cost", "benefit"])
        doc["rows"][1]["label"] = "A1"
        doc["rows"][2]["values"][0] = [0.1]
        text = "\n".join(_violations(doc))
        assert "weight-sum" in text
        assert "unknown indicator kind 'gain'" in text
        assert "label collision ['A1']" in text
        assert "bad pair arity" in text

    def test_syntax_error_has_location(self):
        with pytest.raises(ParseError) as info:
            parse_input(b'{"kind": "decision-matrix",\n "rows": [}')
        assert info.value.line == 2

    def test_unknown_fields_rejected(self):
        assert any("unknown field" in v for v in _violations(_doc(colour="blue")))

    def test_diagnosis_document(self):
        doc = parse_input(DIAGNOSIS.read_text())
        case = doc.to_diagnosis_case()
        assert case.labels == ("Viral fever", "Malaria", "Typhoid", "Stomach problem")
        assert case.weights is None
        with pytest.raises(InputValidationError):
            doc.to_decision_matrix()

    def test_decimal_round_trip(self):
        assert parse_input(render_input(parse_input(SUPPLIERS.read_text()))) == parse_input(
            SUPPLIERS.read_text()
        )


ifn_pair = st.floats(0, 1).flatmap(lambda mu: st.tuples(st.just(mu), st.floats(0, 1 - mu)))


@given(
    st.integers(1, 5).flatmap(
        lambda m: st.tuples(
            st.just(m),
            st.lists(st.lists(ifn_pair, min_size=m, max_size=m), min_size=1, max_size=4),
            st.lists(st.sampled_from(["benefit", "cost"]), min_size=m, max_size=m),
        )
    )
)
def test_render_parse_round_trip(args):
    m, rows, kinds = args
    doc = InputDocument(
        kind="decision-matrix",
        universe=tuple(f"C{j}" for j in range(m)),
        rows=tuple((f"A{i}", tuple(r)) for i, r in enumerate(rows)),
        indicator_kinds=tuple(kinds),
        weights=(1.0,) + (0.0,) * (m - 1),
    )
    assert parse_input(render_input(doc)) == doc


@pytest.mark.parametrize(
    "x, expected", [(0.64105, "0.6410"), (0.64115, "0.6412"), (0.99, "0.9900"), (2.6628499, "2.6628")]
)
def test_round4_half_even(x, expected):
    assert round4(x) == expected


class TestCommands:
    def test_rank_projection(self, tmp_path):
        out = tmp_path / "r.json"
        stdout = io.StringIO()
        assert run_rank(SUPPLIERS, "projection", out, stdout=stdout) == 0
        report = json.loads(out.read_text())
        assert report["best"] == "A4"
        assert report["ranking"] == ["A4", "A3", "A1", "A2", "A5"]
        expected = {"A1": 0.6411, "A2": 0.6096, "A3": 0.6441, "A4": 0.6847, "A5": 0.5906}
        for label, value in expected.items():
            assert abs(report["scores"][label] - value) <= 1e-3
        assert "best: A4" in stdout.getvalue()

    def test_rank_weight_override(self, tmp_path):
        out = tmp_path / "r.json"
        assert run_rank(SUPPLIERS, "s1-hamming", out, weights="0.25,0.25,0.25,0.25", stdout=io.StringIO()) == 0
        assert json.loads(out.read_text())["measure"] == "s1-hamming"

    def test_compare_all(self, tmp_path):
        out = tmp_path / "c.json"
        assert run_compare(SUPPLIERS, "all", out, stdout=io.StringIO()) == 0
        report = json.loads(out.read_text())
        assert len(report["results"]) == 11
        s6 = next(r for r in report["results"] if r["measure"] == "s6-licheng")
        assert s6["p"] == 2.0

    def test_diagnose(self, tmp_path):
        out = tmp_path / "d.json"
        assert run_diagnose(DIAGNOSIS, None, out, stdout=io.StringIO()) == 0
        assert json.loads(out.read_text())["diagnosis"] == "Malaria"

    def test_reports_are_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run_compare(SUPPLIERS, "all", a, stdout=io.StringIO())
        run_compare(SUPPLIERS, "all", b, stdout=io.StringIO())
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_when_no_output(self):
        stdout = io.StringIO()
        assert run_diagnose(DIAGNOSIS, stdout=stdout) == 0
        assert json.loads(stdout.getvalue())["diagnosis"] == "Malaria"

    @pytest.mark.parametrize(
        "call, code",
        [
            (lambda o, e: run_rank(SUPPLIERS, "nope", None, stdout=o, stderr=e), 1),
            (lambda o, e: run_rank(SUPPLIERS, "all", None, stdout=o, stderr=e), 1),
            (lambda o, e: run_rank(SUPPLIERS, "s6-licheng", None, p=0.5, stdout=o, stderr=e), 1),
            (lambda o, e: run_rank(SUPPLIERS, "s1-hamming", None, weights="a,b", stdout=o, stderr=e), 1),
            (lambda o, e: run_rank(SUPPLIERS, "s1-hamming", None, weights="0.5,0.5", stdout=o, stderr=e), 2),
            (lambda o, e: run_rank(DIAGNOSIS, "projection", None, stdout=o, stderr=e), 2),
            (lambda o, e: run_diagnose(SUPPLIERS, stdout=o, stderr=e), 2),
            (lambda o, e: run_rank("/nonexistent/in.json", "projection", None, stdout=o, stderr=e), 2),
        ],
    )
    def test_exit_codes(self, call, code):
        stdout, stderr = io.StringIO(), io.StringIO()
        assert call(stdout, stderr) == code
        assert stderr.getvalue()
        assert stdout.getvalue() == ""

    def test_invalid_document_exit_2_lists_violation(self, tmp_path):
        bad = tmp_path / "bad.json"
        doc = _doc()
        doc["rows"][0]["values"][0] = [0.7, 0.5]
        bad.write_text(json.dumps(doc))
        stderr = io.StringIO()
        out = tmp_path / "o.json"
        assert run_rank(bad, "projection", out, stdout=io.StringIO(), stderr=stderr) == 2
        assert "mu+nu = 1.2 > 1" in stderr.getvalue()
        assert not out.exists()

    def test_unwritable_output_exit_3(self, tmp_path):
        stderr = io.StringIO()
        target = tmp_path / "missing-dir" / "o.json"
        assert run_rank(SUPPLIERS, "projection", target, stdout=io.StringIO(), stderr=stderr) == 3

    def test_argparse_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["rank"])
        assert info.value.code == 1

    def test_module_entry_point(self, tmp_path):
        out = tmp_path / "c.json"
        proc = subprocess.run(
            [sys.executable, "-m", "ifsim", "compare", "--input", str(DIAGNOSIS), "--output", str(out),
             "--measure", "s1-hamming,s8-cosine3d,projection", "--weights", "0.2,0.2,0.2,0.2,0.2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        report = json.loads(out.read_text())
        assert [r["diagnosis"] for r in report["results"]] == ["Malaria"] * 3
