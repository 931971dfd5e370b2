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

import itertools

from absl.testing import absltest
from absl.testing import parameterized
import hypothesis
from hypothesis import strategies as st
from quantum_symmetrization import checks
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.sorting import rules


_KINDS = list(networks.NetworkKind)


class KernelsTest(parameterized.TestCase):

  def test_sort_and_unsort_examples(self):
    network = networks.build_bubble(3)
    self.assertEqual(
        operations.sort_values((3, 1, 2), (0, 0, 0), network),
        ((1, 2, 3), (1, 1, 0)),
    )
    self.assertEqual(
        operations.unsort_values((1, 2, 2), (1, 1, 0), network),
        ((2, 1, 2), (0, 1, 0)),
    )

  # Bubble network on three wires: record, shuffle of 123, unsort of 122.
  @parameterized.parameters(
      ((0, 0, 0), (1, 2, 3), ((1, 2, 2), (0, 0, 0))),
      ((1, 1, 0), (3, 1, 2), ((2, 1, 2), (0, 1, 0))),
      ((0, 1, 1), (2, 3, 1), ((2, 2, 1), (0, 0, 0))),
      ((0, 1, 0), (1, 3, 2), ((1, 2, 2), (0, 1, 0))),
      ((1, 0, 0), (2, 1, 3), ((2, 1, 2), (0, 0, 0))),
      ((1, 1, 1), (3, 2, 1), ((2, 2, 1), (1, 0, 0))),
  )
  def test_trash_table(self, record, shuffled, unsorted):
    network = networks.build_bubble(3)
    self.assertEqual(
        operations.shuffle_values((1, 2, 3), record, network), shuffled
    )
    self.assertEqual(
        operations.sort_values(shuffled, (0, 0, 0), network),
        ((1, 2, 3), record),
    )
    self.assertEqual(
        operations.unsort_values((1, 2, 2), record, network), unsorted
    )

  @parameterized.product(kind=_KINDS, n=[1, 2, 3, 4, 5])
  def test_record_depends_only_on_the_order(self, kind, n):
    network = networks.build_network(kind, n)
    for pattern in itertools.permutations(range(n)):
      expected = operations.record_of(pattern, network)
      for sil in itertools.combinations(range(7), n):
        values = tuple(sil[p] for p in pattern)
        self.assertEqual(operations.record_of(values, network), expected)

  @parameterized.product(kind=_KINDS, n=[1, 2, 3, 4])
  def test_record_with_ties_depends_only_on_the_order(self, kind, n):
    network = networks.build_network(kind, n)
    for values in itertools.product(range(5), repeat=n):
      ranks = {v: r for r, v in enumerate(sorted(set(values)))}
      pattern = tuple(ranks[v] for v in values)
      self.assertEqual(
          operations.record_of(values, network),
          operations.record_of(pattern, network),
      )

  def test_comparator(self):
    self.assertEqual(operations.comparator(5, 2, rules.ASCENDING), (2, 5, 1))
    self.assertEqual(operations.comparator(2, 2, rules.ASCENDING), (2, 2, 0))

  @parameterized.parameters(_KINDS)
  def test_sort_is_a_bijection(self, kind):
    network = networks.build_network(kind, 3)
    inputs = list(
        itertools.product(
            itertools.product(range(3), repeat=3),
            itertools.product((0, 1), repeat=network.size),
        )
    )
    outputs = {operations.sort_values(v, r, network) for v, r in inputs}
    self.assertLen(outputs, len(inputs))
    for values, record in inputs:
      self.assertEqual(
          operations.unsort_values(
              *operations.sort_values(values, record, network), network
          ),
          (values, record),
      )

  @hypothesis.settings(deadline=None, max_examples=10)
  @hypothesis.given(
      kind=st.sampled_from(_KINDS),
      values=st.lists(st.integers(0, 9), min_size=1, max_size=7, unique=True),
  )
  def test_shuffle_replays_record(self, kind, values):
    network = networks.build_network(kind, len(values))
    record = operations.record_of(values, network)
    ordered = tuple(sorted(values))
    self.assertEqual(
        operations.shuffle_values(ordered, record, network), tuple(values)
    )
    self.assertEqual(
        operations.unshuffle_values(values, record, network), ordered
    )

  def test_stable_record_keeps_ties_in_order(self):
    network = networks.build_bitonic(4)
    values = (1, 0, 1, 0)
    record = operations.stable_record(values, network)
    labels = operations.unshuffle_values(('a', 'b', 'c', 'd'), record, network)
    self.assertEqual(labels, ('b', 'd', 'a', 'c'))

  def test_width_and_record_mismatch(self):
    network = networks.build_bitonic(4)
    with self.assertRaisesRegex(ValueError, 'width 4'):
      operations.sort_values((1, 2), (0,) * network.size, network)
    with self.assertRaisesRegex(ValueError, 'Record of length 1'):
      operations.sort_values((1, 2, 3, 4), (0,), network)

  @parameterized.parameters(_KINDS)
  def test_revsort(self, kind):
    values = (1, 3, 5, 2, 4)
    network = networks.build_network(kind, len(values))
    out = operations.revsort_values(
        values, rules.PARITY, rules.ASCENDING, network
    )
    self.assertEqual(out, (1, 2, 3, 4, 5))
    back = operations.revsort_values(
        out, rules.ASCENDING, rules.PARITY, network
    )
    self.assertEqual(back, values)

  def test_revsort_rejects_unsorted_input(self):
    network = networks.build_bitonic(3)
    with self.assertRaisesRegex(ValueError, 'not strictly increasing'):
      operations.revsort_values(
          (2, 1, 3), rules.ASCENDING, rules.PARITY, network
      )


class StateOperationsTest(parameterized.TestCase):

  def _state(self, lists, network):
    layout = state_lib.Layout.of(
        ('data', 3, 5), ('record', network.size, 1)
    )
    amplitude = len(lists) ** -0.5
    return state_lib.SparseState.from_terms(
        layout,
        [((values, (0,) * network.size), amplitude) for values in lists],
    )

  @parameterized.parameters(_KINDS)
  def test_sort_then_unsort(self, kind):
    network = networks.build_network(kind, 3)
    state = self._state([(3, 1, 2), (0, 4, 4), (5, 2, 0)], network)
    sorted_state = operations.sort_op(state, 'data', 'record', network)
    for config in sorted_state.terms:
      self.assertEqual(list(config[0]), sorted(config[0]))
    restored = operations.unsort_op(sorted_state, 'data', 'record', network)
    self.assertAlmostEqual(restored.fidelity(state), 1.0)

  def test_sort_requires_zero_record(self):
    network = networks.build_bubble(3)
    state = self._state([(3, 1, 2)], network)
    sorted_state = operations.sort_op(state, 'data', 'record', network)
    with self.assertRaisesRegex(checks.InvariantViolation, 'record'):
      operations.sort_op(sorted_state, 'data', 'record', network)

  def test_shuffle_then_unshuffle(self):
    network = networks.build_bubble(3)
    state = operations.sort_op(
        self._state([(3, 1, 2)], network), 'data', 'record', network
    )
    shuffled = operations.shuffle_op(state, 'data', 'record', network)
    record = operations.record_of((3, 1, 2), network)
    self.assertEqual(list(shuffled.terms), [((3, 1, 2), record)])
    self.assertAlmostEqual(
        operations.unshuffle_op(shuffled, 'data', 'record', network).fidelity(
            state
        ),
        1.0,
    )

  def test_revsort_op(self):
    network = networks.build_bitonic(3)
    state = state_lib.SparseState.single_register('data', {(1, 3, 2): 1.0}, 3)
    out = operations.revsort_op(
        state, 'data', rules.PARITY, rules.ASCENDING, network
    )
    self.assertEqual(list(out.terms), [((1, 2, 3),)])
    with self.assertRaisesRegex(ValueError, 'REVSORT input'):
      operations.revsort_op(
          out, 'data', rules.PARITY, rules.ASCENDING, network
      )

  def test_depth(self):
    network = networks.build_bitonic(8)
    self.assertEqual(operations.sort_depth(network).comparator_layers, 6)
    report = operations.revsort_depth(network)
    self.assertEqual(report.comparator_layers, 30)
    self.assertEqual(report.ancilla_qubits, 2 * 24 + 8 * 4)


if __name__ == '__main__':
  absltest.main()
