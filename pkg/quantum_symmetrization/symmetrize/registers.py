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

"""Register names and ancilla layouts shared by the symmetrization paths.

The data register holds the lists being symmetrized, the record register one
bit per comparator of the sorting network, and the platform register a
permutation of 12...n used to multiply permutations.
"""

from collections.abc import Callable, Sequence

from quantum_symmetrization import checks
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks


DATA = 'data'
RECORD = 'record'
PLATFORM = 'platform'
SAMPLE = 'sample'
DUPLICATES = 'duplicates'
LES = 'les'
OCCUPATION = 'occupation'


def record_register(network: networks.SortingNetwork) -> state_lib.Register:
  return state_lib.Register(RECORD, network.size, 1)


def permutation_register(name: str, n: int) -> state_lib.Register:
  """Holds a permutation image of 1..n, or zeros before preparation."""
  return state_lib.Register(name, n, n)


def zero_state(*registers: state_lib.Register) -> state_lib.SparseState:
  layout = state_lib.Layout(registers)
  return state_lib.SparseState.basis(layout, layout.zeros())


def check_support(
    state: state_lib.SparseState,
    register: str,
    check: Callable[[Sequence[int], str], None],
):
  """Runs `check` on the contents of `register` in every term."""
  i = state.layout.index(register)
  for config in state.terms:
    check(config[i], register)


def check_sil_support(state: state_lib.SparseState, register: str):
  check_support(state, register, checks.check_sil)


def check_nsil_support(state: state_lib.SparseState, register: str):
  check_support(state, register, checks.check_nsil)
