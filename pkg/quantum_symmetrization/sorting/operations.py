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

"""Quantized sorting: SORT, UNSORT, SHUFFLE, UNSHUFFLE and REVSORT.

A quantized comparator acting on (a, b, bit) flips the bit when a >_Gamma b
and then swaps a and b when the bit is set, so on a zeroed bit it leaves
(min, max, [a > b]). Running a network with one record bit per comparator
gives the four record-register operations:

  SORT:      comparators in network order; sorts the data and writes rec.
  UNSORT:    the exact inverse of SORT.
  SHUFFLE:   replays the swaps stored in a record, in reverse order.
  UNSHUFFLE: the inverse of SHUFFLE.

The `*_values` kernels act on one basis configuration; the `*_op` functions
lift them over a `SparseState`.

Example Usage:
  >>> network = networks.build_bubble(3)
  >>> sort_values((3, 1, 2), (0, 0, 0), network)
  ((1, 2, 3), (1, 1, 0))
  >>> unsort_values((1, 2, 2), (1, 1, 0), network)
  ((2, 1, 2), (0, 1, 0))
"""

from collections.abc import Sequence

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import rules


Record = tuple[int, ...]


def comparator(
    a: rules.Element, b: rules.Element, rule: rules.ComparisonRule
) -> tuple[rules.Element, rules.Element, int]:
  """Returns (min, max, 1 if a >_rule b else 0); ties never swap."""
  if rule.compare(a, b) == -1:
    return b, a, 1
  return a, b, 0


def _check_record(record: Sequence[int], network: networks.SortingNetwork):
  if len(record) != network.size:
    raise ValueError(
        f'Record of length {len(record)} does not match a network with'
        f' {network.size} comparators'
    )


def _check_width(values: Sequence, network: networks.SortingNetwork):
  if len(values) != network.n:
    raise ValueError(
        f'Network of width {network.n} cannot act on {len(values)} values'
    )


def sort_values(
    values: Sequence[rules.Element],
    record: Sequence[int],
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> tuple[tuple, Record]:
  """The SORT kernel; a bijection on (values, record) pairs."""
  _check_width(values, network)
  _check_record(record, network)
  values, record = list(values), list(record)
  for k, (i, j) in enumerate(network.comparators):
    if rule.compare(values[i], values[j]) == -1:
      record[k] ^= 1
    if record[k]:
      values[i], values[j] = values[j], values[i]
  return tuple(values), tuple(record)


def unsort_values(
    values: Sequence[rules.Element],
    record: Sequence[int],
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> tuple[tuple, Record]:
  """The UNSORT kernel, inverse of `sort_values`."""
  _check_width(values, network)
  _check_record(record, network)
  values, record = list(values), list(record)
  for k in reversed(range(network.size)):
    i, j = network.comparators[k]
    if record[k]:
      values[i], values[j] = values[j], values[i]
    if rule.compare(values[i], values[j]) == -1:
      record[k] ^= 1
  return tuple(values), tuple(record)


def shuffle_values(
    values: Sequence, record: Sequence[int], network: networks.SortingNetwork
) -> tuple:
  """Applies the permutation stored in `record` (cSWAPs, reverse order)."""
  _check_width(values, network)
  _check_record(record, network)
  values = list(values)
  for k in reversed(range(network.size)):
    if record[k]:
      i, j = network.comparators[k]
      values[i], values[j] = values[j], values[i]
  return tuple(values)


def unshuffle_values(
    values: Sequence, record: Sequence[int], network: networks.SortingNetwork
) -> tuple:
  """Inverse of `shuffle_values` (cSWAPs in network order)."""
  _check_width(values, network)
  _check_record(record, network)
  values = list(values)
  for k, (i, j) in enumerate(network.comparators):
    if record[k]:
      values[i], values[j] = values[j], values[i]
  return tuple(values)


def record_of(
    values: Sequence[rules.Element],
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> Record:
  """rec: the record SORT writes when sorting `values` from a zero record."""
  return sort_values(values, (0,) * network.size, network, rule)[1]


def stable_record(
    values: Sequence[rules.Element],
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> Record:
  """The record of sorting `values` with ties broken by original position."""
  tagged = [rules.as_tuple(v) + (i,) for i, v in enumerate(values)]
  return record_of(tagged, network, rules.stabilized(rule))


def revsort_values(
    values: Sequence[rules.Element],
    from_rule: rules.ComparisonRule,
    to_rule: rules.ComparisonRule,
    network: networks.SortingNetwork,
) -> tuple:
  """Reversibly re-sorts a `from_rule`-sorted list under `to_rule`.

  Runs SORT^{to}_{1,2}, SORT^{from}_{1,3}, UNSORT_{4,2}, SHUFFLE_{4,3} and
  UNSORT^{from}_{1,3}, where register 4 starts as the index list 1..n and the
  records 2 and 3 start zeroed. All three ancillas end in their initial
  state.

  Args:
    values: A list that is strictly increasing under `from_rule`.
    from_rule: The order `values` is sorted in.
    to_rule: The target order; must distinguish all elements of `values`.
    network: A sorting network of width len(values).

  Returns:
    The elements of `values`, strictly increasing under `to_rule`.

  Raises:
    ValueError: If `values` is not sorted under `from_rule`.
    InvariantViolation: If an ancilla register is not returned clean.
  """
  if not from_rule.is_sorted(values):
    raise ValueError(
        f'{tuple(values)} is not strictly increasing under {from_rule.name}'
    )
  n = len(values)
  zeros = (0,) * network.size
  index = tuple(range(1, n + 1))
  values, record_a = sort_values(values, zeros, network, to_rule)
  values, record_b = sort_values(values, zeros, network, from_rule)
  permuted_index, record_a = unsort_values(index, record_a, network)
  permuted_index = shuffle_values(permuted_index, record_b, network)
  values, record_b = unsort_values(values, record_b, network, from_rule)
  checks.check_zeroed(record_a, 'record 2')
  checks.check_zeroed(record_b, 'record 3')
  if permuted_index != index:
    raise checks.InvariantViolation(
        f'Index register not restored: found {permuted_index}'
    )
  if not to_rule.is_sorted(values):
    raise checks.InvariantViolation(
        f'{values} is not strictly increasing under {to_rule.name}'
    )
  return values


def sort_op(
    state: state_lib.SparseState,
    data: str,
    record: str,
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> state_lib.SparseState:
  """SORT^rule_{data,record}, lifted over `state`.

  Args:
    state: The state to act on.
    data: Name of the register to sort.
    record: Name of a register holding one bit per comparator.
    network: The comparator network.
    rule: The comparison rule.

  Returns:
    The state with every data list sorted and its record written.

  Raises:
    InvariantViolation: If the record register is nonzero on some term.
  """
  i, j = state.layout.index(data), state.layout.index(record)

  def step(config):
    checks.check_zeroed(config[j], f'{record} in {config}')
    values, bits = sort_values(config[i], config[j], network, rule)
    return state_lib.with_register(
        state_lib.with_register(config, i, values), j, bits
    )

  return state.lift(step, name='SORT')


def unsort_op(
    state: state_lib.SparseState,
    data: str,
    record: str,
    network: networks.SortingNetwork,
    rule: rules.ComparisonRule = rules.ASCENDING,
) -> state_lib.SparseState:
  """UNSORT^rule_{data,record}, lifted over `state`."""
  i, j = state.layout.index(data), state.layout.index(record)

  def step(config):
    values, bits = unsort_values(config[i], config[j], network, rule)
    return state_lib.with_register(
        state_lib.with_register(config, i, values), j, bits
    )

  return state.lift(step, name='UNSORT')


def shuffle_op(
    state: state_lib.SparseState,
    data: str,
    record: str,
    network: networks.SortingNetwork,
) -> state_lib.SparseState:
  """SHUFFLE_{data,record}, lifted over `state`."""
  i, j = state.layout.index(data), state.layout.index(record)

  def step(config):
    return state_lib.with_register(
        config, i, shuffle_values(config[i], config[j], network)
    )

  return state.lift(step, name='SHUFFLE')


def unshuffle_op(
    state: state_lib.SparseState,
    data: str,
    record: str,
    network: networks.SortingNetwork,
) -> state_lib.SparseState:
  """UNSHUFFLE_{data,record}, lifted over `state`."""
  i, j = state.layout.index(data), state.layout.index(record)

  def step(config):
    return state_lib.with_register(
        config, i, unshuffle_values(config[i], config[j], network)
    )

  return state.lift(step, name='UNSHUFFLE')


def revsort_op(
    state: state_lib.SparseState,
    data: str,
    from_rule: rules.ComparisonRule,
    to_rule: rules.ComparisonRule,
    network: networks.SortingNetwork,
) -> state_lib.SparseState:
  """REVSORT from `from_rule` to `to_rule` on register `data`."""
  i = state.layout.index(data)

  def step(config):
    try:
      values = revsort_values(config[i], from_rule, to_rule, network)
    except ValueError as e:
      raise ValueError(f'REVSORT input {config}: {e}') from e
    return state_lib.with_register(config, i, values)

  return state.lift(step, name='REVSORT')


def sort_depth(network: networks.SortingNetwork) -> depth.DepthReport:
  """One SORT, UNSORT, SHUFFLE or UNSHUFFLE pass."""
  return depth.DepthReport(
      comparator_layers=network.depth, ancilla_qubits=network.size
  )


def revsort_depth(network: networks.SortingNetwork) -> depth.DepthReport:
  """Five network passes with two records and an index register."""
  index_qubits = network.n * max(1, network.n.bit_length())
  return depth.DepthReport(
      comparator_layers=5 * network.depth,
      ancilla_qubits=2 * network.size + index_qubits,
  )
