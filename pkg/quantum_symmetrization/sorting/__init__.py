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

"""Comparison rules, comparator networks and quantized sorting."""

from . import networks
from . import operations
from . import rules
from .networks import build_bitonic
from .networks import build_bubble
from .networks import build_network
from .networks import NetworkKind
from .networks import SortingNetwork
from .operations import comparator
from .operations import revsort_op
from .operations import revsort_values
from .operations import shuffle_op
from .operations import sort_op
from .operations import unshuffle_op
from .operations import unsort_op
from .rules import ComparisonRule

__all__ = [
    'networks',
    'operations',
    'rules',
    'build_bitonic',
    'build_bubble',
    'build_network',
    'comparator',
    'ComparisonRule',
    'NetworkKind',
    'revsort_op',
    'revsort_values',
    'shuffle_op',
    'sort_op',
    'SortingNetwork',
    'unshuffle_op',
    'unsort_op',
]
