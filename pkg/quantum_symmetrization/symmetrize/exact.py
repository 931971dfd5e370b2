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

"""Exact SIL symmetrization from a uniform superposition of LESs.

Every permutation of 1..n corresponds to exactly one lower exceeding
sequence (LES), and the uniform superposition over LESs is a product state.
Converting it to permutations and sorting them leaves only their records,
which UNSORT then applies to the data.
"""

from absl import logging

from quantum_symmetrization import depth
from quantum_symmetrization import les
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.symmetrize import registers


def exact_sil_symmetrize(
    state: state_lib.SparseState,
    *,
    data: str = registers.DATA,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """Maps every |l> with l an SIL to the uniform superposition of its n! orders.

  Args:
    state: A state whose register `data` holds SILs on every term.
    data: The register to symmetrize.
    kind: The sorting network, also used inside the LES conversion.

  Returns:
    The symmetrized state on the input layout.

  Raises:
    ValueError: If some term holds a list that is not an SIL.
    InvariantViolation: If an ancilla is not returned to a fixed state.
  """
  registers.check_sil_support(state, data)
  n = state.layout[data].arity
  if n <= 1:
    return state
  network = networks.build_network(kind, n)
  out = state.tensor(
      registers.zero_state(
          registers.permutation_register(registers.LES, n),
          registers.record_register(network),
      )
  )
  out = out.superpose(
      les.uniform_les_branch(out.layout.index(registers.LES), n)
  )
  out = les.les_to_perm_op(out, registers.LES, kind)
  out = operations.sort_op(out, registers.LES, registers.RECORD, network)
  # The permutations are sorted to 12...n on every term.
  out = out.drop_registers(
      [registers.LES], expected={registers.LES: range(1, n + 1)}
  )
  out = operations.unsort_op(out, data, registers.RECORD, network)
  logging.info('Exact SIL symmetrization: %d -> %d terms', len(state), len(out))
  return out.drop_registers(
      [registers.RECORD], expected={registers.RECORD: (0,) * network.size}
  )


def exact_sil_depth(
    n: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  network = networks.build_network(kind, n)
  les_qubits = registers.permutation_register(registers.LES, n).qubits
  return (
      depth.DepthReport(elementary_layers=1)
      + les.les_to_perm_depth(n, kind)
      + operations.sort_depth(network).repeated(2)
  ).with_ancillas(les_qubits)
