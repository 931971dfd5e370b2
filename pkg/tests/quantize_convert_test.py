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
from quantum_symmetrization import quantize_convert
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.symmetrize import oracle
from quantum_symmetrization.symmetrize import registers


_KINDS = list(networks.NetworkKind)


def occupations():
  return st.lists(st.integers(0, 3), min_size=1, max_size=6).filter(sum)


def _occupation_state(amplitudes, n) -> state_lib.SparseState:
  return state_lib.SparseState.single_register(
      registers.OCCUPATION, amplitudes, n, normalize=True
  )


class ConverterTest(parameterized.TestCase):

  @parameterized.parameters(_KINDS)
  def test_examples(self, kind):
    self.assertEqual(
        quantize_convert.occ_to_nsil((1, 2, 1), kind=kind), (0, 1, 1, 2)
    )
    self.assertEqual(quantize_convert.occ_to_nsil((0, 2), kind=kind), (1, 1))
    self.assertEqual(
        quantize_convert.nsil_to_occ((0, 1, 1, 2), 3, kind=kind), (1, 2, 1)
    )
    self.assertEqual(quantize_convert.nsil_to_occ((1, 1), 2, kind=kind), (0, 2))

  @parameterized.product(kind=_KINDS, m=[1, 2, 3, 4])
  def test_round_trips_every_occupation(self, kind, m):
    for counts in itertools.product(range(6), repeat=m):
      if not 1 <= sum(counts) <= 5:
        continue
      values = quantize_convert.occ_to_nsil(counts, kind=kind)
      self.assertEqual(values, quantize_convert.naive_occ_to_nsil(counts))
      self.assertEqual(
          quantize_convert.nsil_to_occ(values, m, kind=kind), counts
      )

  @hypothesis.settings(deadline=None, max_examples=20)
  @hypothesis.given(counts=occupations(), kind=st.sampled_from(_KINDS))
  def test_matches_naive_and_round_trips(self, counts, kind):
    values = quantize_convert.occ_to_nsil(counts, kind=kind)
    self.assertEqual(values, quantize_convert.naive_occ_to_nsil(counts))
    self.assertEqual(
        quantize_convert.nsil_to_occ(values, len(counts), kind=kind),
        tuple(counts),
    )
    self.assertEqual(
        quantize_convert.naive_nsil_to_occ(values, len(counts)), tuple(counts)
    )

  def test_trace(self):
    values, stages = quantize_convert.occ_to_nsil((1, 2, 1), trace=True)
    self.assertEqual(values, (0, 1, 1, 2))
    self.assertEqual(
        [s.stage for s in stages],
        ['W1', 'W2', 'W3', 'W4', 'W5', 'W6', 'W7', 'W8', 'Wf'],
    )
    self.assertEqual(stages[0].entries, ((0, 1, 1), (1, 2, 3), (2, 1, 4)))
    self.assertEqual(
        stages[-1].entries,
        (
            (0, 0, 0),
            (1, 0, 0),
            (2, 0, 0),
            (3, 0, 0),
            (3, 1, 1),
            (3, 1, 2),
            (3, 2, 3),
        ),
    )
    _, backward = quantize_convert.nsil_to_occ((0, 1, 1, 2), 3, trace=True)
    self.assertEqual(
        [s.entries for s in backward], [s.entries for s in reversed(stages)]
    )

  def test_staged_list_checks_order(self):
    with self.assertRaisesRegex(checks.InvariantViolation, 'not sorted'):
      quantize_convert.StagedTripleList(
          'W3', ((0, 0, 2), (1, 0, 1)), quantize_convert.W3_RULE
      )

  @parameterized.named_parameters(
      ('empty', ()),
      ('no_particles', (0, 0)),
      ('negative', (1, -1)),
  )
  def test_invalid_occupation(self, counts):
    with self.assertRaises(ValueError):
      quantize_convert.occ_to_nsil(counts)

  @parameterized.named_parameters(
      ('empty', (), 2),
      ('unsorted', (1, 0), 2),
      ('out_of_range', (0, 2), 2),
  )
  def test_invalid_mode_list(self, values, m):
    with self.assertRaises(ValueError):
      quantize_convert.nsil_to_occ(values, m)

  def test_overflow(self):
    with self.assertRaises(OverflowError):
      quantize_convert.occ_to_nsil((3, 3), bits=2)

  def test_depth(self):
    small = quantize_convert.converter_depth(4, 4)
    large = quantize_convert.converter_depth(16, 16)
    self.assertLess(small.total_layers, large.total_layers)
    self.assertGreater(small.ancilla_qubits, 0)


class SecondQuantizationTest(parameterized.TestCase):

  @parameterized.parameters(_KINDS)
  def test_second_to_first_and_back(self, kind):
    state = _occupation_state({(2, 0, 1): 0.6, (0, 3, 0): 0.8j}, 3)
    out = quantize_convert.second_to_first(state, kind=kind)
    self.assertEqual(
        out.layout[registers.DATA], state_lib.Register(registers.DATA, 3, 2)
    )
    target = oracle.oracle_state(
        state_lib.SparseState.single_register(
            registers.DATA, {(0, 0, 2): 0.6, (1, 1, 1): 0.8j}, 2
        )
    )
    self.assertAlmostEqual(out.fidelity(target), 1.0)
    self.assertAlmostEqual(quantize_convert.symmetric_mass(out), 1.0)
    back = quantize_convert.first_to_second(out, 3, kind=kind)
    self.assertEqual(back.layout, state.layout)
    self.assertAlmostEqual(back.fidelity(state), 1.0)

  def test_particle_number_must_be_fixed(self):
    state = _occupation_state({(1, 0): 1.0, (1, 1): 1.0}, 2)
    with self.assertRaisesRegex(ValueError, 'particle numbers'):
      quantize_convert.second_to_first(state)

  def test_first_to_second_rejects_asymmetric_states(self):
    state = state_lib.SparseState.single_register(registers.DATA, {(1, 0): 1})
    self.assertAlmostEqual(quantize_convert.symmetric_mass(state), 0.5)
    with self.assertRaisesRegex(ValueError, 'not symmetric'):
      quantize_convert.first_to_second(state, 2)


if __name__ == '__main__':
  absltest.main()
