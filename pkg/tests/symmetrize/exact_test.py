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

import math

from absl.testing import absltest
from absl.testing import parameterized
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.symmetrize import exact
from quantum_symmetrization.symmetrize import oracle
from quantum_symmetrization.symmetrize import registers


_KINDS = list(networks.NetworkKind)


class ExactSilTest(parameterized.TestCase):

  @parameterized.product(
      kind=_KINDS, values=[(0, 1), (1, 2, 5), (0, 2, 3, 7), (1, 2, 3, 4, 5)]
  )
  def test_single_list(self, kind, values):
    state = state_lib.SparseState.single_register(registers.DATA, {values: 1})
    out = exact.exact_sil_symmetrize(state, kind=kind)
    self.assertLen(out, math.factorial(len(values)))
    self.assertEqual(out.layout, state.layout)
    self.assertAlmostEqual(out.fidelity(oracle.oracle_state(state)), 1.0)

  @parameterized.parameters(_KINDS)
  def test_superposition(self, kind):
    state = state_lib.SparseState.single_register(
        registers.DATA, {(0, 1, 2): 0.6, (1, 3, 4): 0.8j}
    )
    out = exact.exact_sil_symmetrize(state, kind=kind)
    self.assertTrue(out.is_normalized())
    self.assertAlmostEqual(out.fidelity(oracle.oracle_state(state)), 1.0)

  def test_other_register(self):
    layout = state_lib.Layout.of(('x', 1, 1), ('y', 3, 4))
    state = state_lib.SparseState.basis(layout, ((1,), (0, 2, 4)))
    out = exact.exact_sil_symmetrize(state, data='y')
    self.assertLen(out, 6)
    self.assertAlmostEqual(out.fidelity(oracle.oracle_state(state, 'y')), 1.0)

  def test_short_lists_are_unchanged(self):
    state = state_lib.SparseState.single_register(registers.DATA, {(3,): 1})
    self.assertIs(exact.exact_sil_symmetrize(state), state)

  def test_rejects_repeated_values(self):
    state = state_lib.SparseState.single_register(registers.DATA, {(1, 1): 1})
    with self.assertRaisesRegex(ValueError, 'strictly increasing'):
      exact.exact_sil_symmetrize(state)

  def test_depth(self):
    small = exact.exact_sil_depth(4)
    large = exact.exact_sil_depth(16)
    self.assertLess(small.total_layers, large.total_layers)
    self.assertGreater(large.ancilla_qubits, small.ancilla_qubits)


class OracleTest(absltest.TestCase):

  def test_oracle_for(self):
    out = oracle.oracle_for((0, 1, 1))
    self.assertLen(out, 3)
    for amplitude in out.terms.values():
      self.assertAlmostEqual(amplitude, 3**-0.5)
    self.assertEqual(out.layout[registers.DATA].bound, 1)


if __name__ == '__main__':
  absltest.main()
