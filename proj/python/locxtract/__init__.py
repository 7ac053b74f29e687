# Copyright 2026 The locxtract Authors.
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

"""Gazetteer-based fuzzy location extraction for noisy social-network text."""

from ._locxtract import (
    EvalReport,
    ExtractionResult,
    Extractor,
    Gazetteer,
    LocationMatch,
    PipelineConfig,
    Token,
    evaluate,
    levenshtein,
    normalize_name,
    normalized_gld,
    normalized_gld_fraction,
    preprocess,
    strip_symbols,
    tokenize,
)

__all__ = [
    "EvalReport",
    "ExtractionResult",
    "Extractor",
    "Gazetteer",
    "LocationMatch",
    "PipelineConfig",
    "Token",
    "evaluate",
    "levenshtein",
    "normalize_name",
    "normalized_gld",
    "normalized_gld_fraction",
    "preprocess",
    "strip_symbols",
    "tokenize",
]

__version__ = "0.1.0"
