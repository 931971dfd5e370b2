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

"""Symmetrization of non-strictly increasing lists (NSILs).

A list with repeated values has fewer distinct rearrangements than n!, so
applying a uniform superposition of records to it would leave the record
register entangled with the data. The chain below multiplies permutations
on a platform register instead (register names as in `registers`):

  SORT_{platform,record}    Sum_sigma |sigma(12...n)> -> records of sigma
  SHUFFLE_{data,record}     permutes l by sigma
  UNSORT_{platform,record}  moves sigma back onto the platform
  SORT_{data,record}        sorts the data back to l
  UNSHUFFLE_{platform,record}
  UNSORT_{data,record}

after which the data register holds the symmetrized l and the platform the
uniform superposition over H_l, the permutations fixing l. For a
superposition of inputs the platform depends on the multiset of l, so it is
uncomputed with the inverse of the subgroup superposition before the final
UNSORT, while the data register still holds l.

The subgroup superposition itself prepares the LESs of H_l, which form a
product set once the duplicate vector of l is known.
"""

from collections.abc import Sequence
import enum
import functools
import math

from absl import logging

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import les
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.symmetrize import berry
from quantum_symmetrization.symmetrize import duplicates
from quantum_symmetrization.symmetrize import exact
from quantum_symmetrization.symmetrize import registers


class ResourceKind(enum.Enum):
  """How the platform resource Sum_sigma |sigma(12...n)> is prepared."""

  EXACT = 'exact'
  BERRY = 'berry'


@functools.lru_cache(maxsize=None)
def permutation_resource(
    n: int,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    resource: ResourceKind = ResourceKind.EXACT,
) -> tuple[state_lib.SparseState, float]:
  """The uniform superposition of all permutations of 12...n.

  Args:
    n: Length of the permutations.
    kind: The sorting network used by the preparation.
    resource: The preparation path.

  Returns:
    The state over the platform register and the probability with which the
    preparation succeeds.
  """
  platform = registers.permutation_register(registers.PLATFORM, n)
  identity = state_lib.SparseState.basis(
      state_lib.Layout((platform,)), [tuple(range(1, n + 1))]
  )
  match resource:
    case ResourceKind.EXACT:
      out = exact.exact_sil_symmetrize(
          identity, data=registers.PLATFORM, kind=kind
      )
      return out, 1.0
    case ResourceKind.BERRY:
      output = berry.berry_sil_symmetrize(
          identity,
          berry.BerryConfig.default(n, postselect=True),
          data=registers.PLATFORM,
          kind=kind,
      )
      return output.state, output.success_probability

  raise ValueError(f'Unknown resource kind {resource}')


def _les_l_branch(
    dup_index: int, platform_index: int
) -> state_lib.BranchMap:
  """Prepares the product superposition over LES_l, read off dup(l)."""

  def branch(config):
    checks.check_zeroed(config[platform_index], registers.PLATFORM)
    starts = duplicates.block_starts(config[dup_index])
    members = les.product_les(starts)
    amplitude = 1 / math.sqrt(len(members))
    return [
        (state_lib.with_register(config, platform_index, s), amplitude)
        for s in members
    ]

  return branch


def _with_duplicates(
    state: state_lib.SparseState, data: str
) -> state_lib.SparseState:
  n = state.layout[data].arity
  out = state.tensor(
      registers.zero_state(state_lib.Register(registers.DUPLICATES, n, n))
  )
  return duplicates.detect_duplicates_op(out, data, registers.DUPLICATES)


def _without_duplicates(
    state: state_lib.SparseState, data: str
) -> state_lib.SparseState:
  out = duplicates.detect_duplicates_op(state, data, registers.DUPLICATES)
  n = state.layout[data].arity
  return out.drop_registers(
      [registers.DUPLICATES], expected={registers.DUPLICATES: (0,) * n}
  )


def subgroup_superposition(
    state: state_lib.SparseState,
    *,
    data: str = registers.DATA,
    platform: str = registers.PLATFORM,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """Sum_l a_l |l>|0> -> Sum_l a_l |l> |H_l|^(-1/2) Sum_{h in H_l} |h(12...n)>.

  Args:
    state: A state whose `data` register holds NSILs and whose `platform`
      register is zeroed.
    data: The NSIL register.
    platform: The permutation register to prepare.
    kind: The sorting network used by the LES conversion.

  Returns:
    The state with the subgroup superposition on `platform`.

  Raises:
    ValueError: If some term holds a list that is not an NSIL.
  """
  registers.check_nsil_support(state, data)
  out = _with_duplicates(state, data)
  out = out.superpose(
      _les_l_branch(
          out.layout.index(registers.DUPLICATES), out.layout.index(platform)
      )
  )
  out = les.les_to_perm_op(out, platform, kind)
  return _without_duplicates(out, data)


def unsubgroup_superposition(
    state: state_lib.SparseState,
    *,
    data: str = registers.DATA,
    platform: str = registers.PLATFORM,
) -> state_lib.SparseState:
  """The inverse of `subgroup_superposition`; zeroes the platform."""
  registers.check_nsil_support(state, data)
  out = _with_duplicates(state, data)
  out = les.perm_to_les_op(out, platform)
  p = out.layout.index(platform)
  zeros = (0,) * out.layout[platform].arity
  out = out.unsuperpose(
      _les_l_branch(out.layout.index(registers.DUPLICATES), p),
      lambda config: state_lib.with_register(config, p, zeros),
  )
  return _without_duplicates(out, data)


def _chain_ancillas(
    n: int, kind: networks.NetworkKind, resource: ResourceKind
) -> tuple[state_lib.SparseState, networks.SortingNetwork]:
  network = networks.build_network(kind, n)
  platform, probability = permutation_resource(n, kind, resource)
  if probability < 1.0:
    logging.info(
        'Platform resource prepared with probability %.6f', probability
    )
  record = registers.zero_state(registers.record_register(network))
  return record.tensor(platform), network


def _multiply_on_platform(
    state: state_lib.SparseState, data: str, network: networks.SortingNetwork
) -> state_lib.SparseState:
  """The first five steps of the chain, ending with l sorted in `data`."""
  rec, plat = registers.RECORD, registers.PLATFORM
  out = operations.sort_op(state, plat, rec, network)
  out = operations.shuffle_op(out, data, rec, network)
  out = operations.unsort_op(out, plat, rec, network)
  out = operations.sort_op(out, data, rec, network)
  return operations.unshuffle_op(out, plat, rec, network)


def nsil_symmetrize_single(
    values: Sequence[int],
    *,
    bound: int | None = None,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    resource: ResourceKind = ResourceKind.EXACT,
) -> state_lib.SparseState:
  """Symmetrizes one classical NSIL.

  Args:
    values: The NSIL l.
    bound: Element bound of the data register, by default max(l).
    kind: The sorting network.
    resource: How the platform resource is prepared.

  Returns:
    The state over (data, record, platform): the symmetrized l, a zeroed
    record and the uniform superposition over H_l, as a product state. Use
    `discard_ancillas` to keep only the data register.

  Raises:
    ValueError: If `values` is not an NSIL.
  """
  values = tuple(values)
  checks.check_nsil(values, 'l')
  state = state_lib.SparseState.single_register(
      registers.DATA, {values: 1.0}, bound
  )
  n = len(values)
  ancillas, network = _chain_ancillas(n, kind, resource)
  out = _multiply_on_platform(state.tensor(ancillas), registers.DATA, network)
  out = operations.unsort_op(out, registers.DATA, registers.RECORD, network)
  logging.info('Symmetrized %s into %d terms', values, len(out))
  return out


def discard_ancillas(state: state_lib.SparseState) -> state_lib.SparseState:
  """Drops the zeroed record and factors the platform away from the data."""
  n = state.layout[registers.RECORD].arity
  out = state.drop_registers(
      [registers.RECORD], expected={registers.RECORD: (0,) * n}
  )
  data, _ = out.factor([registers.DATA])
  return data


def nsil_symmetrize_superposed(
    state: state_lib.SparseState,
    *,
    data: str = registers.DATA,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    resource: ResourceKind = ResourceKind.EXACT,
) -> state_lib.SparseState:
  """Symmetrizes a superposition of NSILs, returning every ancilla to zero.

  Args:
    state: A state whose register `data` holds NSILs on every term.
    data: The register to symmetrize.
    kind: The sorting network.
    resource: How the platform resource is prepared.

  Returns:
    Sum_l a_l |sym(l)> on the input layout.

  Raises:
    ValueError: If some term holds a list that is not an NSIL.
    InvariantViolation: If an ancilla is left entangled with the data.
  """
  registers.check_nsil_support(state, data)
  n = state.layout[data].arity
  ancillas, network = _chain_ancillas(n, kind, resource)
  out = _multiply_on_platform(state.tensor(ancillas), data, network)
  out = unsubgroup_superposition(out, data=data)
  out = operations.unsort_op(out, data, registers.RECORD, network)
  logging.info(
      'Symmetrized superposition of %d lists into %d terms',
      len(state),
      len(out),
  )
  return out.drop_registers(
      [registers.RECORD, registers.PLATFORM],
      expected={
          registers.RECORD: (0,) * network.size,
          registers.PLATFORM: (0,) * n,
      },
  )


def unsymmetrize(
    state: state_lib.SparseState,
    *,
    data: str = registers.DATA,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """The inverse of `nsil_symmetrize_superposed`.

  Args:
    state: A symmetrized state, Sum_l a_l |sym(l)>.
    data: The symmetrized register.
    kind: The sorting network.

  Returns:
    Sum_l a_l |l> on the input layout.

  Raises:
    InvariantViolation: If the input is not symmetric, which leaves the
      platform entangled with the data.
  """
  n = state.layout[data].arity
  network = networks.build_network(kind, n)
  rec, plat = registers.RECORD, registers.PLATFORM
  out = state.tensor(
      registers.zero_state(
          registers.record_register(network),
          registers.permutation_register(plat, n),
      )
  )
  out = operations.sort_op(out, data, rec, network)
  out = subgroup_superposition(out, data=data, kind=kind)
  out = operations.shuffle_op(out, plat, rec, network)
  out = operations.unsort_op(out, data, rec, network)
  out = operations.sort_op(out, plat, rec, network)
  out = operations.unshuffle_op(out, data, rec, network)
  out = operations.unsort_op(out, plat, rec, network)
  out = out.drop_registers([rec], expected={rec: (0,) * network.size})
  platform, rest = out.factor([plat])
  resource, _ = permutation_resource(n, kind)
  fidelity = platform.fidelity(resource)
  if fidelity < 1 - state_lib.NORM_ATOL:
    raise checks.InvariantViolation(
        f'Platform was not returned to the resource state: fidelity {fidelity}'
    )
  return rest


def single_input_depth(
    n: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  """Resource preparation followed by six network passes."""
  network = networks.build_network(kind, n)
  platform_qubits = registers.permutation_register(registers.PLATFORM, n).qubits
  return (
      exact.exact_sil_depth(n, kind)
      + operations.sort_depth(network).repeated(6)
  ).with_ancillas(platform_qubits)


def subgroup_superposition_depth(
    n: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  """Duplicate detection, LES preparation, conversion and uncomputation."""
  detect = duplicates.detect_duplicates_depth(n)
  dup_qubits = state_lib.Register(registers.DUPLICATES, n, n).qubits
  return (
      detect
      + depth.DepthReport(elementary_layers=1)
      + les.les_to_perm_depth(n, kind)
      + detect
  ).with_ancillas(dup_qubits)


def superposed_depth(
    n: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  """The single-input chain with the platform uncomputed."""
  return single_input_depth(n, kind) + subgroup_superposition_depth(
      n, kind
  ).with_ancillas(
      registers.permutation_register(registers.PLATFORM, n).qubits
  )
