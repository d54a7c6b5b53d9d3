import json

import pytest

from c2trig.bipoly import BiPoly
from c2trig.tables import (
    build_table, golden_text, parse_golden, render_table, table_cells, table_labels,
)
from c2trig.trig import Family

CASES = [(f, c) for f in Family for c in (0, 1)]
ROWS = dict(zip(CASES, [20, 16, 12, 16, 16, 12, 9, 12]))


@pytest.mark.parametrize("family,cls", CASES, ids=lambda v: str(getattr(v, "value", v)))
def test_golden_bytes(family, cls):
    assert render_table(family, cls) == golden_text(family, cls)


@pytest.mark.parametrize("family,cls", CASES, ids=lambda v: str(getattr(v, "value", v)))
def test_row_counts(family, cls):
    assert len(table_labels(family, cls)) == ROWS[(family, cls)]
    assert len(parse_golden(golden_text(family, cls))) == ROWS[(family, cls)]


def test_header_and_first_rows():
    cells = table_cells("cplus", 0)
    assert cells[0][:4] == ["c+", "1", "Y", "X^2"]
    assert cells[1][:2] == ["1/2(0,0)", "1"]
    assert cells[2][:3] == ["2(1,1)", "0", "1"]
    assert table_cells("sminus", 1)[0][0] == "s-/W"


def test_empty_table_rejected():
    with pytest.raises(ValueError):
        build_table("sminus", 0, max_lambda=1)
    with pytest.raises(ValueError):
        table_labels("cplus", 2)


def test_markdown():
    md = render_table("splus", 0, 4, "markdown").splitlines()
    assert md[0].startswith("| s+/V |")
    assert set(md[1]) <= set("|-")
    assert len(md) == 2 + len(table_labels("splus", 0, 4))


def test_json_records():
    recs = json.loads(render_table("cminus", 1, 4, "json"))
    assert all(r["family"] == "cminus" and r["congruence"] == 1 for r in recs)
    first = recs[0]
    assert (first["lambda"], first["mu"], first["g"]) == (1, 0, "2")
    assert BiPoly.from_terms_json(first["terms"]) == BiPoly.const(1)


def test_unknown_format():
    with pytest.raises(ValueError):
        render_table("cplus", 0, 3, "xml")
