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

from absl.testing import absltest
from absl.testing import parameterized
import hypothesis
from hypothesis import strategies as st
from quantum_symmetrization import checks
from quantum_symmetrization.sorting import rules


class RulesTest(parameterized.TestCase):

  @parameterized.parameters((1, 2, 1), (2, 1, -1), (3, 3, 0))
  def test_ascending(self, x, y, expected):
    self.assertEqual(rules.ASCENDING.compare(x, y), expected)

  def test_sign_is_reversed_from_cmp(self):
    self.assertTrue(rules.ASCENDING.precedes(1, 2))
    self.assertEqual(rules.ASCENDING.compare(1, 2), 1)
    self.assertEqual(sorted((3, 1, 2), key=rules.ASCENDING.key()), [1, 2, 3])

  def test_parity(self):
    self.assertEqual(rules.PARITY.compare(2, 7), -1)
    self.assertEqual(
        rules.sorted_under(rules.PARITY, (1, 2, 3, 4, 5, 7, 8)),
        (1, 3, 5, 7, 2, 4, 8),
    )

  def test_arity_mismatch(self):
    with self.assertRaisesRegex(ValueError, 'compares 2-tuples'):
      rules.lexicographic(2).compare((1, 2), (1, 2, 3))

  @hypothesis.settings(deadline=None, max_examples=10)
  @hypothesis.given(
      values=st.lists(st.integers(0, 9), min_size=2, max_size=8, unique=True)
  )
  def test_is_sorted(self, values):
    self.assertTrue(rules.ASCENDING.is_sorted(sorted(values)))
    self.assertFalse(rules.ASCENDING.is_sorted(sorted(values, reverse=True)))

  def test_stabilized_breaks_ties_by_index(self):
    rule = rules.stabilized(rules.PARITY)
    self.assertEqual(rule.arity, 2)
    self.assertEqual(rule.compare((4, 1), (4, 2)), 1)
    self.assertEqual(rule.compare((4, 2), (4, 1)), -1)
    self.assertEqual(rule.compare((3, 5), (4, 1)), 1)

  def test_from_precedence(self):
    rule = rules.from_precedence('desc', 1, lambda x, y: x > y)
    self.assertEqual(rule.compare(5, 2), 1)
    self.assertEqual(rule.compare(2, 2), 0)

  def test_from_precedence_not_total(self):
    rule = rules.from_precedence('never', 1, lambda x, y: False)
    with self.assertRaisesRegex(checks.InvariantViolation, 'not total'):
      rule.compare(1, 2)


if __name__ == '__main__':
  absltest.main()
