import json
import random

import pytest
from hypothesis import given

from conftest import R4, cyc, rings, seeds
from yoneda_ext import serialization as io
from yoneda_ext.errors import MalformedInput, NotExact
from yoneda_ext.random_gen import random_exact_sequence, random_morphism, random_presentation


@given(rings, seeds)
def test_module_round_trip(ring, seed):
    M = random_presentation(ring, random.Random(seed))
    assert io.module_from_json(json.loads(json.dumps(io.module_to_json(M)))) == M


@given(rings, seeds)
def test_morphism_round_trip(ring, seed):
    rng = random.Random(seed)
    f = random_morphism(random_presentation(ring, rng), random_presentation(ring, rng), rng)
    g = io.morphism_from_json(json.loads(json.dumps(io.morphism_to_json(f))))
    assert g == f and g.matrix == f.matrix


@given(rings, seeds)
def test_sequence_round_trip(ring, seed):
    S = random_exact_sequence(2, ring, random.Random(seed), max_gens=2)
    assert io.sequence_from_json(json.loads(json.dumps(io.sequence_to_json(S)))) == S


def test_files_round_trip(tmp_path, z4_nonsplit):
    io.save_sequence(z4_nonsplit, tmp_path / "s.json")
    assert io.load_sequence(str(tmp_path / "s.json")) == z4_nonsplit
    io.save_module(cyc(R4, 2), tmp_path / "a.json")
    assert io.load_module(str(tmp_path / "a.json")) == cyc(R4, 2)


def test_relative_module_paths(tmp_path):
    (tmp_path / "a.json").write_text(json.dumps({"ring": {"Zmod": 4}, "generators": 1, "relations": [[2]]}))
    doc = {"modules": ["a.json", {"ring": {"Zmod": 4}, "generators": 1}, "a.json"], "arrows": [[[2]], [[1]]]}
    (tmp_path / "s.json").write_text(json.dumps(doc))
    S = io.load_sequence(str(tmp_path / "s.json"))
    assert S.length == 1
    (tmp_path / "f.json").write_text(json.dumps({"source": "a.json", "target": "a.json", "matrix": [[1]]}))
    assert io.load_morphism(str(tmp_path / "f.json")).matrix.tolist() == [[1]]


@pytest.mark.parametrize("doc", [
    [],
    {"ring": "Q", "generators": 1},
    {"ring": {"Zmod": 1}, "generators": 1},
    {"ring": "Z", "generators": -1},
    {"ring": "Z", "generators": 2, "relations": [[1]]},
    {"ring": "Z", "generators": 1, "relations": [[1.5]]},
    {"ring": "Z"},
])
def test_malformed_modules(doc):
    with pytest.raises(MalformedInput):
        io.module_from_json(doc)


def test_malformed_sequences():
    a = {"ring": {"Zmod": 4}, "generators": 1, "relations": [[2]]}
    with pytest.raises(MalformedInput):
        io.sequence_from_json({"modules": [a, a], "arrows": [[[1]]]})
    with pytest.raises(MalformedInput):
        io.sequence_from_json({"modules": [a, a, a], "arrows": [[[1]], [[1, 0]]]})
    with pytest.raises(MalformedInput):
        io.sequence_from_json({"modules": [a, {"ring": "Z", "generators": 1}, a], "arrows": [[[1]], [[1]]]})
    # not a morphism: Z/2 -> Z/4 by 1 is not well defined
    z4 = {"ring": {"Zmod": 4}, "generators": 1}
    with pytest.raises(MalformedInput):
        io.sequence_from_json({"modules": [a, z4, a], "arrows": [[[1]], [[1]]]})
    with pytest.raises(NotExact):
        io.sequence_from_json({"modules": [a, a, a], "arrows": [[[1]], [[1]]]})


def test_unreadable_file(tmp_path):
    with pytest.raises(MalformedInput):
        io.load_module(str(tmp_path / "missing.json"))
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(MalformedInput):
        io.load_module(str(tmp_path / "bad.json"))
