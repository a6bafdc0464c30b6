# Copyright 2026 The defclust Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Clustering of definitional contexts by textual energy."""


import os
import pathlib

import pytest

import defclust

DATA = pathlib.Path(
    os.environ.get(
        "DEFCLUST_DATA_DIR",
        pathlib.Path(__file__).resolve().parents[2] / "data",
    )
)


def test_tokenize_lowercases_and_keeps_diacritics():
    assert defclust.tokenize("La Célula, es-un núcleo") == [
        "la", "célula", "es", "un", "núcleo"]
    assert defclust.tokenize("la célula", stopwords=["la"]) == ["célula"]


def test_energy_matrix_matches_hand_computation():
    x = defclust.BinaryDocTermMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    e = defclust.energy_matrix(x)
    # G = [[2,1,0],[1,2,1],[0,1,1]]; E = G.G / 2
    assert e == [[2.5, 2.0, 0.5], [2.0, 3.0, 1.5], [0.5, 1.5, 1.0]]


def test_hamming_example():
    x = defclust.BinaryDocTermMatrix([[1, 0, 1, 0], [1, 1, 0, 0]])
    assert defclust.hamming_distances(x).values == [0.5]


def test_dendrogram_and_cut():
    d = defclust.PairwiseDistances(4, [0.1, 0.9, 0.9, 0.9, 0.9, 0.2])
    tree = defclust.build_dendrogram(d)
    assert [tuple(m) for m in tree.merges] == [
        (0, 1, 0.1, 4), (2, 3, 0.2, 5), (4, 5, 0.9, 6)]
    c = defclust.cut_at_threshold(tree, 0.5)
    assert c.groups == [[0, 1], [2, 3]]
    assert defclust.recall(c, 4) == 1.0
    intruders = defclust.identify_intruders(c, ["a", "a", "b", "c"])
    assert intruders == [3]
    assert defclust.precision(c, intruders) == 0.75
    whole = defclust.cut_at_threshold(tree, 1.0)
    assert whole.groups == [[0, 1, 2, 3]]
    with pytest.raises(ValueError):
        defclust.cut_at_threshold(tree, 1.5)


def test_zones():
    assert [defclust.classify_zone(a) for a in (0.5, 0.8, 0.9, 1.0)] == [
        "zone1", "zone2", "zone3", "absolute"]


def test_sweep_on_bundled_corpus():
    docs = defclust.load_corpus(DATA / "synthetic" / "corpus.jsonl")
    assert len(docs) == 120
    vocabulary, matrix = defclust.ingest(docs)
    assert matrix.rows == 120 and matrix.cols == len(vocabulary)
    tree = defclust.build_dendrogram(defclust.energy_distances(matrix))
    gold = {d.id: d.gold_sense for d in docs}
    rows = defclust.run_sweep(tree, matrix.doc_ids, gold)
    assert len(rows) == 100
    assert rows[-1].num_groups == 1 and rows[-1].recall == 1.0
    assert rows[-1].zone == "absolute"
    recalls = [r.recall for r in rows]
    assert recalls == sorted(recalls)


def test_pattern_scan():
    patterns = defclust.expand_patterns(["aguja"])
    cands = defclust.scan_text(
        "Se sabe que la aguja es un instrumento fino.", "f", patterns)
    assert len(cands) == 1
    c = cands[0]
    assert (c.begin, c.end, c.term, c.tail, c.verified) == (
        12, 26, "aguja", "instrumento fino", False)
    docs, skipped = defclust.candidates_to_corpus(cands)
    assert [d.id for d in docs] == ["f#1"] and skipped == 0
    assert docs[0].def_type == "analytic"


def test_data_errors_surface_as_value_errors(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "a"}\n')
    with pytest.raises(defclust.DataError):
        defclust.load_corpus(bad)
    assert issubclass(defclust.DataError, ValueError)
