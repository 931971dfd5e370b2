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
import warnings

from absl.testing import absltest
from absl.testing import parameterized
import hypothesis
from hypothesis import strategies as st
import numpy as np
from quantum_symmetrization.sorting import networks


class NetworksTest(parameterized.TestCase):

  def test_bubble(self):
    self.assertEqual(
        networks.build_bubble(3).comparators, ((0, 1), (1, 2), (0, 1))
    )

  @parameterized.parameters((2, 1, 1), (4, 3, 6), (8, 6, 24), (16, 10, 80))
  def test_bitonic_power_of_two(self, n, expected_depth, expected_size):
    network = networks.build_bitonic(n)
    self.assertEqual(network.depth, expected_depth)
    self.assertEqual(network.size, expected_size)

  @parameterized.product(
      kind=list(networks.NetworkKind), n=list(range(1, 13))
  )
  def test_sorts_all_binary_inputs(self, kind, n):
    self.assertTrue(networks.build_network(kind, n).sorts_all_binary())

  # Past 12 wires: every input of weight <= 2 or >= n - 2, plus seeded ones.
  @parameterized.parameters(13, 16, 17, 24, 31, 32, 33, 48, 63, 64)
  def test_large_bitonic_sorts_binary_inputs(self, n):
    rng = np.random.default_rng(n)
    network = networks.build_bitonic(n)
    inputs = []
    for ones in itertools.chain(
        itertools.combinations(range(n), 1),
        itertools.combinations(range(n), 2),
    ):
      bits = [0] * n
      for i in ones:
        bits[i] = 1
      inputs.append(bits)
      inputs.append([1 - b for b in bits])
    inputs.extend(rng.integers(0, 2, size=(500, n)).tolist())
    for bits in inputs:
      self.assertEqual(network.apply(bits), tuple(sorted(bits)))

  def test_padded_bitonic_has_no_sentinel_comparators(self):
    network = networks.build_bitonic(5)
    self.assertTrue(all(j < 5 for _, j in network.comparators))
    self.assertLess(network.size, networks.build_bitonic(8).size)

  @hypothesis.settings(deadline=None, max_examples=10)
  @hypothesis.given(
      values=st.lists(st.integers(0, 20), min_size=1, max_size=12)
  )
  def test_apply_sorts(self, values):
    network = networks.build_bitonic(len(values))
    self.assertEqual(network.apply(values), tuple(sorted(values)))

  def test_invalid_networks(self):
    with self.assertRaisesRegex(ValueError, 'disjoint'):
      networks.SortingNetwork(3, (((0, 1), (1, 2)),))
    with self.assertRaisesRegex(ValueError, 'needs 0 <= i < j'):
      networks.SortingNetwork(2, (((1, 0),),))
    with self.assertRaisesRegex(ValueError, 'positive'):
      networks.build_bitonic(0)

  def test_json(self):
    network = networks.build_bitonic(6)
    with warnings.catch_warnings():
      warnings.simplefilter('error')
      text = network.to_json()
    restored = networks.SortingNetwork.from_json(6, text)
    self.assertEqual(restored, network)
    self.assertEqual(
        networks.build_bubble(3).to_json(), '[[[0,1]],[[1,2]],[[0,1]]]'
    )

  def test_shuffled_within_layers(self):
    network = networks.build_bitonic(8)
    shuffled = network.shuffled_within_layers(0)
    self.assertEqual(shuffled.depth, network.depth)
    for a, b in zip(shuffled.layers, network.layers):
      self.assertCountEqual(a, b)
    self.assertTrue(shuffled.sorts_all_binary())

  def test_build_network_is_cached(self):
    self.assertIs(
        networks.NetworkKind.BUBBLE.build(4),
        networks.build_network(networks.NetworkKind.BUBBLE, 4),
    )


if __name__ == '__main__':
  absltest.main()
