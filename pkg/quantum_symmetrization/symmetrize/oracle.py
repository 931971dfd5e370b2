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

"""Brute-force symmetrization oracle."""

from collections.abc import Sequence
import math

from quantum_symmetrization import permutations
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.symmetrize import registers


def oracle_state(
    state: state_lib.SparseState, data: str = registers.DATA
) -> state_lib.SparseState:
  """Symmetrizes register `data` by enumerating multiset permutations.

  Every term |l>|rest> becomes |rest> times the uniform superposition of the
  distinct rearrangements of l.

  Args:
    state: Any state with a register `data`.
    data: The register to symmetrize.

  Returns:
    The symmetrized state, unnormalized if inputs share a multiset.
  """
  i = state.layout.index(data)
  terms = []
  for config, amplitude in state.terms.items():
    arrangements = permutations.multiset_permutations(config[i])
    weight = amplitude / math.sqrt(len(arrangements))
    terms.extend(
        (state_lib.with_register(config, i, t), weight) for t in arrangements
    )
  return state_lib.SparseState.from_terms(state.layout, terms)


def oracle_for(
    values: Sequence[int], bound: int | None = None, name: str = registers.DATA
) -> state_lib.SparseState:
  """The symmetrized state of a single list."""
  return oracle_state(
      state_lib.SparseState.single_register(name, {tuple(values): 1.0}, bound),
      name,
  )
