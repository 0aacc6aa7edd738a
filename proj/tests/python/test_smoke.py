import json
import os
from pathlib import Path

import pytest

import kaninj

CORPUS = Path(os.environ.get("KANINJ_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def test_builtin_posets():
    v = kaninj.poset("vee")
    assert len(v) == 3
    assert kaninj.poset("chain3").leq("c0", "c2")
    assert not kaninj.poset("antichain2").leq("a", "b")
    assert kaninj.isomorphic(v.dual().dual(), v)


def test_poset_from_pairs_and_json():
    p = kaninj.Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.leq("a", "c")
    q = kaninj.Poset.from_json(p.to_json())
    assert q == p
    assert json.loads(p.to_json())["elements"] == ["a", "b", "c"]


def test_errors_carry_codes():
    with pytest.raises(kaninj.KaninjError) as info:
        kaninj.Poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert info.value.code == "CycleDetected"
    with pytest.raises(ValueError):
        kaninj.poset("nonsense")


def test_left_kan_and_density():
    h = kaninj.h_join()
    assert kaninj.is_dense(h)
    not_dense = kaninj.MonotoneMap(kaninj.poset("one"), kaninj.poset("chain2"), {"*": "low"})
    assert not kaninj.is_dense(not_dense)
    f = kaninj.MonotoneMap(h.dom, kaninj.poset("chain2"), {"a": "low", "b": "high"})
    ext = kaninj.left_kan(f, h)
    assert ext["exists"] and ext["strict"]
    assert ext["extension"]["map"] == {"a": "low", "b": "high", "top": "high"}


def test_injectivity_verdicts():
    both = [kaninj.h_bottom(), kaninj.h_join()]
    assert kaninj.injectivity(kaninj.poset("diamond"), both)["verdict"] == "strong"
    assert kaninj.injectivity(kaninj.poset("antichain2"), [kaninj.h_join()])["verdict"] != "strong"


def test_reflect_known_completions():
    r = kaninj.reflect(kaninj.poset("antichain2"), [kaninj.h_join()])
    assert r["converged"]
    assert len(r["reflected"]["elements"]) == 3
    r = kaninj.reflect(kaninj.poset("chain2"), [kaninj.h_bottom()])
    assert len(r["reflected"]["elements"]) == 3
    r = kaninj.reflect(kaninj.poset("antichain2"), [kaninj.h_join()], max_steps=2)
    assert not r["converged"]


def test_extend_and_cone():
    p = kaninj.MonotoneMap(kaninj.poset("antichain2"), kaninj.poset("chain2"), {"a": "low", "b": "high"})
    ext = kaninj.extend_along_unit(p, [kaninj.h_join()])
    assert ext.cod == p.cod
    cone, i_h, j = kaninj.mapping_cone(kaninj.h_join())
    assert i_h.cod == cone and j.cod == cone


def test_suite_and_corpus():
    report = kaninj.run_suite("bilimits", size_cap=3)
    assert report["ok"] and report["failed"] == 0
    assert "kz" in kaninj.suite_names()
    text = (CORPUS / "maps" / "h_join.json").read_text()
    assert kaninj.MonotoneMap.from_json(text) == kaninj.h_join()
    assert len(kaninj.enumerate_posets(4, up_to=True)) == 25
