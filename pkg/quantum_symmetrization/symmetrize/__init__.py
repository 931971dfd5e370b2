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

"""The symmetrization algorithms and their building blocks."""

from . import berry
from . import dicke
from . import duplicates
from . import exact
from . import nsil
from . import oracle
from . import registers
from .berry import berry_sil_symmetrize
from .berry import BerryConfig
from .dicke import dicke as dicke_state
from .dicke import dicke_superposition
from .duplicates import detect_duplicates
from .exact import exact_sil_symmetrize
from .nsil import nsil_symmetrize_single
from .nsil import nsil_symmetrize_superposed
from .nsil import ResourceKind
from .nsil import subgroup_superposition
from .oracle import oracle_state

__all__ = [
    'berry',
    'dicke',
    'duplicates',
    'exact',
    'nsil',
    'oracle',
    'registers',
    'berry_sil_symmetrize',
    'BerryConfig',
    'detect_duplicates',
    'dicke_state',
    'dicke_superposition',
    'exact_sil_symmetrize',
    'nsil_symmetrize_single',
    'nsil_symmetrize_superposed',
    'oracle_state',
    'ResourceKind',
    'subgroup_superposition',
]
