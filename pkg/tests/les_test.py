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
import math
import os

from absl.testing import absltest
from absl.testing import parameterized
import hypothesis
from hypothesis import strategies as st
import numpy as np
from quantum_symmetrization import checks
from quantum_symmetrization import les
from quantum_symmetrization import permutations
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks


hypothesis.settings.register_profile(
    'qsym_default',
    database=None,
    deadline=None,
    derandomize=True,
    max_examples=10,
    verbosity=hypothesis.Verbosity.normal,
)
hypothesis.settings.load_profile(
    os.getenv('HYPOTHESIS_PROFILE', default='qsym_default')
)


_KINDS = list(networks.NetworkKind)


class LesBijectionTest(parameterized.TestCase):

  def test_example(self):
    sigma = permutations.Permutation((4, 3, 6, 1, 2, 5))
    self.assertEqual(les.perm_to_les(sigma), (1, 2, 1, 1, 5, 3))
    self.assertEqual(les.les_to_perm_naive((1, 2, 1, 1, 5, 3)), sigma)
    for kind in _KINDS:
      s = les.perm_to_les(sigma)
      self.assertEqual(les.les_to_perm_parallel(s, kind), sigma)

  @parameterized.product(kind=_KINDS, n=[1, 2, 3, 4, 5, 6])
  def test_parallel_matches_naive(self, kind, n):
    images = set()
    for s in les.all_les(n):
      sigma = les.les_to_perm_parallel(s, kind)
      self.assertEqual(sigma, les.les_to_perm_naive(s))
      self.assertEqual(les.perm_to_les(sigma), s)
      images.add(sigma.image)
    self.assertLen(images, math.factorial(n))

  @hypothesis.settings(deadline=None, max_examples=10)
  @hypothesis.given(n=st.integers(6, 12), seed=st.integers(0, 2**16))
  def test_random_round_trip(self, n, seed):
    s = les.random_les(n, seed)
    self.assertTrue(les.is_les(s))
    self.assertEqual(les.perm_to_les(les.les_to_perm_parallel(s)), s)

  @parameterized.parameters(1, 2, 3, 4, 5, 6, 7)
  def test_naive_bijection(self, n):
    images = set()
    for s in les.all_les(n):
      sigma = les.les_to_perm_naive(s)
      self.assertEqual(les.perm_to_les(sigma), s)
      images.add(sigma.image)
    self.assertLen(images, math.factorial(n))
    for sigma in permutations.Permutation.all(n):
      self.assertEqual(les.les_to_perm_naive(les.perm_to_les(sigma)), sigma)

  @parameterized.parameters(8, 16, 32)
  def test_seeded_round_trips(self, n):
    rng = np.random.default_rng(n)
    for _ in range(3334):
      s = les.random_les(n, rng)
      sigma = les.les_to_perm_parallel(s)
      self.assertEqual(sigma, les.les_to_perm_naive(s))
      self.assertEqual(les.perm_to_les(sigma), s)

  def test_empty(self):
    self.assertEqual(les.les_to_perm_parallel(()).image, ())

  def test_rejects_invalid(self):
    with self.assertRaisesRegex(ValueError, '1 <= s_i <= i'):
      les.les_to_perm_parallel((1, 3, 1))
    with self.assertRaisesRegex(ValueError, '1 <= s_i <= i'):
      les.les_to_perm_naive((0,))


class MergeDiagramsTest(parameterized.TestCase):

  def test_merge(self):
    # Columns 1 and 2 each fill their own row 1.
    self.assertEqual(les.merge_diagrams(((1, 1),), ((1, 2),)), ((1, 2), (2, 1)))
    self.assertEqual(les.merge_diagrams(((1, 1),), ((2, 2),)), ((1, 1), (2, 2)))

  @parameterized.parameters(_KINDS)
  def test_merge_three_and_three(self, kind):
    # Right rows 1, 3 and 6 stay; left rows 1..3 move to rows 2, 4 and 5.
    self.assertEqual(
        les.merge_diagrams(
            ((1, 3), (2, 1), (3, 2)), ((1, 4), (3, 6), (6, 5)), kind
        ),
        ((1, 4), (2, 3), (3, 6), (4, 1), (5, 2), (6, 5)),
    )

  def test_merge_with_an_empty_side(self):
    self.assertEqual(les.merge_diagrams((), ((1, 3),)), ((1, 3),))

  def test_merge_rejects_bad_input(self):
    with self.assertRaisesRegex(ValueError, 'not sorted by row'):
      les.merge_diagrams(((2, 1), (1, 2)), ((1, 3),))
    with self.assertRaisesRegex(ValueError, 'Right columns must exceed'):
      les.merge_diagrams(((1, 2),), ((1, 1),))

  def test_rank_arrays(self):
    les.RankArrays((1, 1, 2), (0, 1, 1))
    with self.assertRaisesRegex(checks.InvariantViolation, 'add up'):
      les.RankArrays((1, 2), (1, 1))


class LesFamilyTest(parameterized.TestCase):

  @parameterized.parameters(1, 2, 3, 4, 5, 6)
  def test_family_images_are_the_stabilizer(self, n):
    for values in itertools.combinations_with_replacement(range(n), n):
      family = list(les.les_family(values))
      self.assertLen(family, les.les_family_size(values))
      self.assertLen(set(family), len(family))
      images = {les.les_to_perm_naive(s) for s in family}
      self.assertEqual(images, set(permutations.enumerate_h(values)))

  def test_family_of_a_sparse_list(self):
    values = (0, 0, 1, 3, 3)
    images = {les.les_to_perm_naive(s) for s in les.les_family(values)}
    self.assertLen(images, 4)
    self.assertEqual(images, set(permutations.enumerate_h(values)))

  def test_product_les(self):
    self.assertEqual(
        les.product_les((1, 2, 2)), ((1, 2, 2), (1, 2, 3))
    )


class LesOperationsTest(parameterized.TestCase):

  def _uniform(self, n):
    layout = state_lib.Layout.of(('les', n, n))
    zero = state_lib.SparseState.basis(layout, layout.zeros())
    return zero.superpose(les.uniform_les_branch(0, n))

  @parameterized.parameters(_KINDS)
  def test_uniform_superposition_of_permutations(self, kind):
    n = 4
    state = self._uniform(n)
    self.assertLen(state, math.factorial(n))
    perms = les.les_to_perm_op(state, 'les', kind)
    self.assertEqual(
        set(c[0] for c in perms.terms),
        {p.image for p in permutations.Permutation.all(n)},
    )
    self.assertTrue(perms.is_normalized())
    back = les.perm_to_les_op(perms, 'les')
    self.assertAlmostEqual(back.fidelity(state), 1.0)

  def test_branch_requires_zeroed_register(self):
    layout = state_lib.Layout.of(('les', 2, 2))
    state = state_lib.SparseState.basis(layout, ((1, 1),))
    with self.assertRaisesRegex(checks.InvariantViolation, 'LES'):
      state.superpose(les.uniform_les_branch(0, 2))

  @parameterized.parameters(_KINDS)
  def test_depth_grows_polylogarithmically(self, kind):
    reports = [les.les_to_perm_depth(2**k, kind) for k in range(1, 6)]
    layers = [r.total_layers for r in reports]
    self.assertEqual(layers, sorted(layers))
    self.assertGreater(reports[-1].ancilla_qubits, reports[0].ancilla_qubits)


if __name__ == '__main__':
  absltest.main()
