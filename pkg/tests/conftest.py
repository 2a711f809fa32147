import json
from pathlib import Path

import pytest

from ifsim import DecisionMatrix, DiagnosisCase, Ifs, WeightVector

DATA = Path(__file__).resolve().parent.parent / "data"
SUPPLIERS = DATA / "supplier_selection.json"
DIAGNOSIS = DATA / "medical_diagnosis.json"

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def supplier_matrix() -> DecisionMatrix:
    doc = json.loads(SUPPLIERS.read_text())
    rows = [(r["label"], r["values"]) for r in doc["rows"]]
    return DecisionMatrix.build(rows, doc["universe"], doc["indicator_kinds"], doc["weights"])


@pytest.fixture
def diagnosis_case() -> DiagnosisCase:
    doc = json.loads(DIAGNOSIS.read_text())
    universe = doc["universe"]
    diseases = tuple((r["label"], Ifs.from_pairs(universe, r["values"])) for r in doc["rows"])
    patient = Ifs.from_pairs(universe, doc["patient"]["values"])
    return DiagnosisCase(diseases, patient)


@pytest.fixture
def uniform5() -> WeightVector:
    return WeightVector.uniform(5)


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome, then assert it."""

    def record(name: str, ok: bool, detail: str = "") -> None:
        _criteria.append((name, bool(ok), detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
