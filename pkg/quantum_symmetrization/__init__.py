# Copyright 2026 DeepMind Technologies Limited.
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

"""Register-level simulation of quantum symmetrization circuits."""

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import interferometry
from quantum_symmetrization import les
from quantum_symmetrization import permutations
from quantum_symmetrization import prefix_scan
from quantum_symmetrization import quantize_convert
from quantum_symmetrization import sorting
from quantum_symmetrization import state
from quantum_symmetrization import symmetrize

# pylint: disable=g-importing-member
# Carefully selected member imports for the top-level public API.
from quantum_symmetrization.state import SparseState

__version__ = '0.1.0.dev0'
