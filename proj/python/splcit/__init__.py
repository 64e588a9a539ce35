# Copyright 2026 The splcit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pairwise covering arrays for software product line feature models."""

from splcit._splcit import (
    CapExceededError,
    FeatureModel,
    ParseError,
    SplcitError,
    a12,
    analyze,
    classify_features,
    count_products,
    generate,
    is_satisfiable,
    is_valid,
    load_model,
    parse_model,
    products,
    run_benchmark,
    similarity,
    spearman,
    suite_metrics,
    suite_similarity,
    synthetic_model,
    tuple_frequency,
    valid_tsets,
    verify,
    wilcoxon,
)

__all__ = [
    "CapExceededError",
    "FeatureModel",
    "ParseError",
    "SplcitError",
    "a12",
    "analyze",
    "classify_features",
    "count_products",
    "generate",
    "is_satisfiable",
    "is_valid",
    "load_model",
    "parse_model",
    "products",
    "run_benchmark",
    "similarity",
    "spearman",
    "suite_metrics",
    "suite_similarity",
    "synthetic_model",
    "tuple_frequency",
    "valid_tsets",
    "verify",
    "wilcoxon",
]
