import ast
import json
from dataclasses import replace
from pathlib import Path

import pytest

import sphericalpf
from sphericalpf import arbor, crosscheck, ideal, seqcore
from sphericalpf.crosscheck import (
    CHECKS,
    WITNESS_CAP,
    check_conjecture,
    check_eq2,
    check_eq4,
    check_eq5,
    check_kreweras,
    check_raised_set_formula,
    check_recursion,
    check_spherical_count,
    check_theorem_main,
    check_u_correspondence,
    check_yan,
)
from sphericalpf.errors import ParameterError


def test_theorem_examples():
    r = check_theorem_main(4)
    assert r.ok and r.lhs == r.rhs == 152
    assert check_theorem_main(2).lhs == 4
    assert check_theorem_main(7).lhs == 308800
    with pytest.raises(ParameterError):
        check_theorem_main(1)


def test_spherical_examples():
    r = check_spherical_count(4)
    assert r.ok and r.lhs == 27
    assert r.details == {"expanded_stream_size": 27, "naive_filter_size": 27}
    assert check_spherical_count(2).lhs == 1
    r8 = check_spherical_count(8)
    assert r8.ok and r8.lhs == 823543 and r8.details == {}


def test_conjecture_examples():
    r = check_conjecture(4)
    assert r.ok and r.lhs == {0: 12, 1: 10, 2: 4, 3: 1}
    assert check_conjecture(2).rhs == {0: 1}
    r6 = check_conjecture(6)
    assert r6.ok and r6.lhs.total == r6.rhs.total == 3125


def test_kreweras_examples():
    assert check_kreweras(1).lhs == {0: 1}
    r2 = check_kreweras(2)
    assert r2.ok and r2.lhs == {0: 2, 1: 1}
    r3 = check_kreweras(3)
    assert r3.ok and r3.rhs == {0: 6, 1: 6, 2: 3, 3: 1}
    assert "C(n,2)" in r3.note


def test_u_correspondence_examples():
    for (n, k), size in {(4, 3): 125, (4, 2): 152, (3, 0): 27}.items():
        r = check_u_correspondence(n, k)
        assert r.ok and r.lhs == r.rhs == r.details["closed_count"] == size


def test_raised_set_examples():
    r = check_raised_set_formula(4)
    assert r.ok and r.lhs[2] == 8 and r.lhs[4] == 1
    r3 = check_raised_set_formula(3)
    assert r3.ok and r3.details["weighted_total"] == 27


def test_identity_checks():
    r = check_eq2(4)
    assert r.ok and r.lhs == r.rhs == 27
    assert check_eq4(4).ok and check_eq5(3).lhs == 27
    assert check_recursion(6).ok and check_yan(4, 2).rhs == 152


def test_checks_are_deterministic():
    for fn, args in [(check_conjecture, (5,)), (check_u_correspondence, (4, 1)),
                     (check_raised_set_formula, (4,)), (check_spherical_count, (5,))]:
        a, b = fn(*args), fn(*args)
        assert a.to_dict(timing=False) == b.to_dict(timing=False)
        assert replace(a, elapsed_ms=0) == replace(b, elapsed_ms=0)


def test_report_json_encodes_counts_as_strings():
    d = check_conjecture(4).to_dict()
    assert d["lhs"]["buckets"] == {"0": "12", "1": "10", "2": "4", "3": "1"}
    assert d["lhs"]["total"] == "27"
    assert "elapsed_ms" in d
    json.dumps(d)
    assert check_theorem_main(3).to_dict()["lhs"] == "20"


def test_witnesses_replay_on_falsified_predicate(monkeypatch):
    real = seqcore.is_u_parking_function
    dropped = {(1, 0, 1, 2), (3, 3, 0, 0)}

    def broken(a, u):
        return tuple(a) not in dropped and real(a, u)

    monkeypatch.setattr(seqcore, "is_u_parking_function", broken)
    r = check_u_correspondence(4, 3)
    assert r.verdict == "mismatch"
    assert {tuple(w["element"]) for w in r.witnesses} == {(1, 0, 1, 2)}
    gens = ideal.skeleton_generators(4, 3)
    u = seqcore.make_u_nk(4, 3)
    for w in r.witnesses:
        assert ideal.is_standard(w["element"], gens) != broken(w["element"], u)


def test_distribution_witnesses_replay_and_cap(monkeypatch):
    real = arbor.uprooted_statistic_distribution

    def shifted(n, statistic):
        return real(n, statistic).relabel(lambda k: k + 1)

    monkeypatch.setattr(arbor, "uprooted_statistic_distribution", shifted)
    r = check_conjecture(6)
    assert not r.ok
    assert 0 < len(r.witnesses) <= WITNESS_CAP
    full = check_conjecture(6, full=True)
    assert len(full.witnesses) > WITNESS_CAP
    for w in full.witnesses:
        assert w["lhs"] != w["rhs"]
        assert r.lhs.get(w["key"], 0) == w["lhs"]
        assert shifted(6, "surface_inversions").get(w["key"], 0) == w["rhs"]


def test_matching_reports_have_no_witnesses():
    for name, (fn, takes_k, _) in CHECKS.items():
        r = fn(4, 2) if takes_k else fn(4)
        assert r.ok, name
        assert r.witnesses == ()


BRUTE_FORCE_MODULES = ["seqcore.py", "ideal.py", "arbor.py"]


@pytest.mark.parametrize("module", BRUTE_FORCE_MODULES)
def test_enumerators_never_import_closed_forms(module):
    src = Path(sphericalpf.__file__).with_name(module).read_text()
    for node in ast.walk(ast.parse(src)):
        if isinstance(node, ast.ImportFrom):
            assert node.module not in ("identity", "crosscheck"), module
            assert not any(a.name in ("identity", "crosscheck") for a in node.names), module
        if isinstance(node, ast.Import):
            assert not any("identity" in a.name for a in node.names), module
