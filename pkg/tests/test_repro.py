import pytest

import repro
from rbcommon import ReportError
from repro import INFORMATIONAL, MATCH, ReportItem


def statuses(items):
    return {item.name: item.status for item in items}


def test_table1():
    items = repro.run_report("table1")
    assert len(items) == 12
    assert all(item.status == MATCH for item in items)
    assert items[0].computed == "(14, 14, 7, 8, 9, 8, -3, -5, -5, -6, -2, 1, 4, -2, -2)"


def test_degree_four_lie_identities():
    items = repro.run_report("deg4lie")
    found = statuses(items)
    assert repro.MISMATCH not in found.values()
    for name in ("deg4lie.rank", "deg4lie.free", "deg4lie.relations", "deg4lie.space", "deg4lie.tortkara_span"):
        assert found[name] == MATCH
    for i in (1, 2, 3):
        assert found[f"deg4lie.g{i}"] == MATCH
        assert found[f"deg4lie.g{i}_span"] == MATCH
        assert found[f"deg4lie.g{i}_printed"] == INFORMATIONAL
    by_name = {item.name: item for item in items}
    assert by_name["deg4lie.g3"].computed == "g3 = tortkara(c,a,d,b)"
    assert by_name["deg4lie.g1_printed"].expected == "g1 = tortkara(c,a,d,b)"
    assert "equals g3" in by_name["deg4lie.g1_printed"].note


def test_theorem1():
    items = repro.run_report("theorem1")
    assert all(item.status in (MATCH, INFORMATIONAL) for item in items), [i.name for i in items if i.status != MATCH]
    assert statuses(items)["theorem1.rbo_wrong_weight"] == MATCH


def test_unknown_report():
    with pytest.raises(ReportError):
        repro.run_report("table9")


def test_report_item_json():
    item = ReportItem("x.y", "claim", "1", "2", status=repro.MISMATCH)
    assert item.to_json() == {
        "name": "x.y",
        "claim": "claim",
        "computed": "1",
        "expected": "2",
        "provenance": repro.PUBLISHED,
        "status": "mismatch",
    }
    assert ReportItem("x", "c", "1", "1", note="seen").to_json()["note"] == "seen"


def test_every_report_is_registered():
    assert set(repro.REPORTS) == {
        "table1",
        "deg4lie",
        "deg4rcom",
        "deg5jordan",
        "counterexamples",
        "starfamily",
        "epsalgebra",
        "novikov",
        "zinbielsearch",
        "theorem1",
    }


@pytest.mark.parametrize(
    "name",
    ["deg4lie", "deg4rcom", "deg5jordan", "counterexamples", "starfamily", "epsalgebra", "novikov", "zinbielsearch"],
)
def test_reports_have_no_mismatch(name):
    items = repro.run_report(name)
    assert items
    assert all(item.name.startswith(f"{name}.") for item in items)
    assert [item.name for item in items if item.status == repro.MISMATCH] == []


def test_degree_five_jordan_identities():
    items = repro.run_report("deg5jordan")
    found = statuses(items)
    for name in ("deg5jordan.basis", "deg5jordan.dimension", "deg5jordan.semantic", "deg5jordan.f5_span"):
        assert found[name] == MATCH
    by_name = {item.name: item for item in items}
    assert by_name["deg5jordan.f5_span"].computed == "20/20"
    for i in range(1, 21):
        item = by_name[f"deg5jordan.g{i}"]
        assert item.expected.endswith(" = 0")
        if item.status == MATCH:
            assert item.computed == item.expected
        else:
            assert item.status == INFORMATIONAL
            assert "not zero after commutative normal form" in item.note


def test_degree_four_right_commutative_identities():
    found = statuses(repro.run_report("deg4rcom"))
    assert found["deg4rcom.f4_permutations"] == MATCH
    assert found["deg4rcom.completeness"] == MATCH


def test_standard_skew_identity_on_the_diamond_product():
    by_name = {item.name: item for item in repro.run_report("novikov")}
    for name in ("novikov.stdskew5", "novikov.stdskew5p"):
        item = by_name[name]
        assert item.status == INFORMATIONAL
        assert item.computed == "holds"
        assert item.expected == "fails"
        assert item.note.startswith("vanishes on all")


def test_cyclic_identity_fails_for_the_second_integral():
    item = {item.name: item for item in repro.run_report("zinbielsearch")}["zinbielsearch.cyc4"]
    assert item.status == INFORMATIONAL
    assert item.computed == "fails"
    assert item.note.startswith("witness ")
    assert "-1/15120*x^9" in item.note
