# Copyright 2026 The tern2jw Authors
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

"""Ternary qubit trees and their Clifford transformations to the Jordan-Wigner chain."""

from tern2jw._core import (
    Circuit,
    Gate,
    MappingResult,
    PauliString,
    StraightenResult,
    TernaryTree,
    check_certificate,
    check_generator_set,
    conjugate,
    full_ternary,
    jw_chain,
    jw_generator,
    map_between,
    oracle_check,
    oracle_conjugate,
    random_tree,
    run_cli,
    straighten,
)

__all__ = [
    "Circuit",
    "Gate",
    "MappingResult",
    "PauliString",
    "StraightenResult",
    "TernaryTree",
    "check_certificate",
    "check_generator_set",
    "conjugate",
    "full_ternary",
    "jw_chain",
    "jw_generator",
    "map_between",
    "oracle_check",
    "oracle_conjugate",
    "random_tree",
    "run_cli",
    "straighten",
]
