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

from defclust._core import (
    BinaryDocTermMatrix,
    CandidateContext,
    Clustering,
    DataError,
    Dendrogram,
    Document,
    EvalRow,
    Merge,
    PairwiseDistances,
    SearchPattern,
    build_dendrogram,
    candidates_to_corpus,
    classify_zone,
    cut_at_threshold,
    energy_distances,
    energy_matrix,
    expand_patterns,
    hamming_distances,
    identify_intruders,
    ingest,
    load_corpus,
    precision,
    recall,
    run_sweep,
    scan_text,
    tokenize,
)

__version__ = "0.1.0"
