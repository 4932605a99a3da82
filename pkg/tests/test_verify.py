import json

import pytest

from turansq.errors import UnknownClaimError
from turansq.search import SearchConfig
from turansq.verify import CLAIMS, verify_claim

ROW_KEYS = {"n", "formula", "search", "expected_classes", "found_classes", "pass"}


def test_thm3_row_8():
    rep = verify_claim("thm3", range(5, 10))
    assert rep.passed
    row = next(r for r in rep.rows if r.n == 8)
    assert row.formula == row.search == 18


def test_thm5_excluding_5():
    rep = verify_claim("thm5", [4, 6, 7, 8, 9])
    assert rep.passed
    assert next(r for r in rep.rows if r.n == 9).search == 24


def test_thm5_n5_is_marked_excluded():
    rep = verify_claim("thm5", [5])
    (row,) = rep.rows
    assert row.passed is None
    assert row.note == "excluded by theorem; search value 10"
    assert rep.passed


def test_prop11_three_classes():
    rep = verify_claim("prop11", [8])
    assert rep.passed
    assert len(rep.rows[0].found_classes) == 3


def test_thm7_values():
    rep = verify_claim("thm7", range(6, 10))
    assert rep.passed
    assert [r.search for r in rep.rows] == [12, 15, 19, 24]


@pytest.mark.parametrize("claim", ["mantel", "thm4", "thm6", "thm8", "lemma12",
                                   "erdos-gallai", "faudree-schelp"])
def test_default_ranges_pass(claim):
    assert verify_claim(claim).passed


def test_dirac_uniqueness_rows():
    rep = verify_claim("dirac", range(4, 10))
    status = {r.n: r.passed for r in rep.rows}
    # values hold everywhere; unique extremal graph holds from n = 7 on
    assert all(r.formula == r.search for r in rep.rows)
    assert status == {4: True, 5: False, 6: False, 7: True, 8: True, 9: True}
    assert not rep.passed


def test_conjecture_consistency_rows():
    rep = verify_claim("conjecture-consistency", range(3, 41), ks=[3, 4, 5])
    assert rep.passed
    rep6 = verify_claim("conjecture-consistency", range(6, 41), ks=[6])
    failing = sorted(r.n for r in rep6.rows if r.passed is False)
    assert failing == [n for n in range(6, 41) if n % 6 in (1, 2, 3)]


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        verify_claim("thm99")


def test_rows_beyond_cap_are_skipped_and_fail():
    rep = verify_claim("thm3", [9, 17])
    assert rep.rows[1].status == "skipped"
    assert not rep.passed


def test_inexact_search_is_never_accepted():
    rep = verify_claim("thm7", [9], cfg=SearchConfig(node_limit=2))
    assert not rep.exact and not rep.passed
    assert rep.to_dict()["exact"] is False


def test_json_schema_is_stable():
    rep = verify_claim("thm8", [6, 7])
    d = json.loads(rep.to_json())
    assert list(d)[:3] == ["claim", "rows", "pass"]
    assert {"nodes", "elapsed_ms"} <= set(d)
    for row in d["rows"]:
        assert ROW_KEYS <= set(row)
    assert rep.to_json(False) == verify_claim("thm8", [6, 7]).to_json(False)


def test_every_claim_is_registered():
    assert set(CLAIMS) == {"mantel", "dirac", "thm3", "thm4", "thm5", "thm6", "thm7", "thm8",
                           "prop11", "lemma12", "erdos-gallai", "faudree-schelp",
                           "conjecture-consistency"}
