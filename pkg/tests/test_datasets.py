import importlib.util
import json
from fractions import Fraction
from pathlib import Path

import pytest

from unimodal.datasets import (DATA_DIR, NAMES, build, cantor_dataset,
                               cantor_function, cantor_intervals, load_raw,
                               report_text, verify, verify_all)
from unimodal.errors import UnknownDataset
from unimodal.line import evaluate, variation, Interval
from unimodal.serialize import dump_text

ROOT = Path(__file__).resolve().parents[1]
DATA_FILES = sorted(DATA_DIR.glob("*.json"))


def _generator():
    spec = importlib.util.spec_from_file_location(
        "make_datasets", ROOT / "tools" / "make_datasets.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def _strip_timing(report):
    out = json.loads(json.dumps(report))
    for d in out["datasets"]:
        d.pop("seconds", None)
    return out


@pytest.mark.parametrize("path", DATA_FILES, ids=lambda p: p.stem)
def test_files_round_trip_byte_for_byte(path):
    text = path.read_text(encoding="utf-8")
    assert dump_text(json.loads(text)) == text


def test_generator_reproduces_the_files():
    gen = _generator()
    written = {}
    for make in gen.BUILDERS:
        raw = make()
        written[raw["name"]] = dump_text(raw)
    assert set(written) == {p.stem for p in DATA_FILES}
    for path in DATA_FILES:
        assert written[path.stem] == path.read_text(encoding="utf-8"), path.stem


def test_shipped_cantor_matches_generator():
    assert load_raw("cantor_truncated") == cantor_dataset(2)
    assert load_raw("cantor_truncated_2") == cantor_dataset(2)
    assert load_raw("cantor_truncated", 4) == cantor_dataset(4)


def test_unknown_names():
    for bad in ("nope", "cantor_truncated_x", "graph_example_3"):
        with pytest.raises(UnknownDataset):
            build(bad)
    with pytest.raises(ValueError):
        cantor_dataset(-1)


def test_cantor_function_shape():
    assert cantor_intervals(1) == [(0, Fraction(1, 3)), (Fraction(2, 3), 1)]
    for n in range(4):
        f = cantor_function(n)
        for a, b in cantor_intervals(n):
            assert evaluate(f, a) == evaluate(f, b) == Fraction(1, 2)
        want = Fraction(1, 2) * (1 - Fraction(2, 3) ** n)
        assert variation(f, "negative", Interval.open(0, 1)) == want


def test_build_targets():
    assert build("circle_8pt").target_function.values[0] == 4
    g = build("graph_example_1").target_function
    assert g.values["a1"] == 5 and g.values["c"] == 2
    assert build("graph_example_2").target == "f"
    assert build("cantor_truncated", 3).name == "cantor_truncated_3"
    assert build("plane_example_1").target_function.exponent == Fraction(1, 2)


@pytest.mark.parametrize("name", NAMES)
def test_every_claim_holds(name):
    results = verify(name)
    assert results
    for r in results:
        assert r.ok, (r.id, r.status, r.detail)


def test_external_claims_are_labeled(graph2):
    results = {r.id: r for r in verify(graph2)}
    r = results["ucat_lower"]
    assert r.status == "externally proved" and not r.checkable
    assert r.provenance == "stated"
    assert results["f_not_unimodal"].status == "fail (expected)"
    assert results["pv_bound_d"].status == "fail (expected)"
    assert results["pv_bound_de"].status == "pass"


def test_verify_all_is_deterministic():
    a = verify_all()
    assert a["ok"]
    b = verify_all()
    assert _strip_timing(a) == _strip_timing(b)
    text = report_text(a)
    assert text.endswith("all checks passed")
    assert "[stated]" in text and "[constructed]" in text
