import json
import math

import numpy as np

from hyperspec.report import FAIL, PASS, SKIP, Report, check_close, check_le, check_lt, dumps, skipped


def test_check_semantics():
    assert check_le("a", 1.0, 1.0).status == PASS
    assert check_le("a", 1.1, 1.0, 0.05).status == FAIL
    assert check_lt("b", 1.0, 1.0).status == FAIL
    assert check_lt("b", 0.5, 1.0, 0.4).status == PASS
    assert check_close("c", 1.0, 1.0 + 1e-9, 1e-8).status == PASS
    assert skipped("d", "why").status == SKIP and skipped("d", "why").passed


def test_report_serialization():
    rep = Report("demo", "2 2 1\n0 1\n")
    rep.add(check_le("x", 0.0, 1.0))
    rep.data["v"] = np.array([1.0, math.inf])
    doc = json.loads(dumps(rep.to_dict()))
    assert doc["passed"] and doc["data"]["v"] == [1.0, "inf"]
    assert doc["checks"][0] == {"name": "x", "status": "PASS", "lhs": 0.0, "rhs": 1.0, "tolerance": 0.0}
    rep.add(check_lt("y", 2.0, 1.0))
    assert not rep.passed
    assert rep.summary_lines()[1].startswith("FAIL y")
