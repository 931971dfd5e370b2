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

import json
import os
from unittest import mock

from absl import app
from absl.testing import absltest
from absl.testing import flagsaver
from absl.testing import parameterized
from quantum_symmetrization import checks
from quantum_symmetrization import cli
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.symmetrize import registers


def _options(**kwargs) -> cli.CliOptions:
  return cli.CliOptions(**kwargs)


class ParseTest(parameterized.TestCase):

  @parameterized.parameters(
      ('122', (1, 2, 2)), ('1,2,12', (1, 2, 12)), ('', ())
  )
  def test_parse_ints(self, text, expected):
    self.assertEqual(cli.parse_ints(text), expected)

  @parameterized.parameters('1a', '1,,2', '-1')
  def test_parse_ints_rejects(self, text):
    with self.assertRaisesRegex(ValueError, 'list of integers'):
      cli.parse_ints(text)


class SymmetrizeCommandTest(parameterized.TestCase):

  @parameterized.parameters(
      (cli.SymmetrizeMode.SINGLE, '011'),
      (cli.SymmetrizeMode.SUPERPOSED, '0,1,1'),
      (cli.SymmetrizeMode.SIL_EXACT, '125'),
  )
  def test_exact_modes(self, mode, text):
    code, payload = cli.run_command('symmetrize', [text], _options(mode=mode))
    self.assertEqual(code, 0)
    self.assertAlmostEqual(payload['fidelity'], 1.0)
    self.assertEqual(payload['mode'], mode.value)
    self.assertEqual(payload['manifest']['command'], 'symmetrize')
    self.assertEqual(payload['manifest']['parameters']['mode'], mode.value)
    self.assertLen(payload['manifest']['fingerprint'], 64)
    self.assertGreater(payload['manifest']['depth']['comparator_layers'], 0)

  def test_berry(self):
    options = _options(mode=cli.SymmetrizeMode.SIL_BERRY, padding=9)
    code, payload = cli.run_command('symmetrize', ['125'], options)
    self.assertEqual(code, 0)
    self.assertLess(payload['success_probability'], 1.0)
    self.assertGreaterEqual(
        payload['fidelity'], payload['fidelity_bound'] - 1e-9
    )
    postselected = _options(
        mode=cli.SymmetrizeMode.SIL_BERRY, padding=9, postselect=True
    )
    _, payload = cli.run_command('symmetrize', ['125'], postselected)
    self.assertAlmostEqual(payload['fidelity'], 1.0)

  def test_state_file(self):
    state = state_lib.SparseState.single_register(
        registers.DATA, {(0, 0, 1): 0.6, (0, 1, 1): 0.8}
    )
    path = self.create_tempfile('state.json', state.to_json()).full_path
    code, payload = cli.run_command('symmetrize', [path], _options())
    self.assertEqual(code, 0)
    self.assertAlmostEqual(payload['fidelity'], 1.0)
    self.assertEqual(payload['terms'], 6)

  def test_sil_mode_rejects_repeated_values(self):
    options = _options(mode=cli.SymmetrizeMode.SIL_EXACT)
    code, payload = cli.run_command('symmetrize', ['011'], options)
    self.assertEqual(code, 2)
    self.assertIn('strictly increasing', payload['error'])
    self.assertNotIn('\n', payload['error'])

  def test_fingerprint_ignores_timing(self):
    _, first = cli.run_command('symmetrize', ['011'], _options())
    _, second = cli.run_command('symmetrize', ['011'], _options())
    self.assertEqual(
        first['manifest']['fingerprint'], second['manifest']['fingerprint']
    )
    _, other = cli.run_command('symmetrize', ['012'], _options())
    self.assertNotEqual(
        first['manifest']['fingerprint'], other['manifest']['fingerprint']
    )


class OtherCommandsTest(parameterized.TestCase):

  def test_dicke(self):
    code, payload = cli.run_command('dicke', ['4', '2'], _options())
    self.assertEqual(code, 0)
    self.assertEqual(payload['terms'], 6)
    self.assertAlmostEqual(payload['fidelity'], 1.0)

  def test_dicke_superposition(self):
    options = _options(weights='1:0.6,3:0.8')
    code, payload = cli.run_command('dicke', ['4'], options)
    self.assertEqual(code, 0)
    self.assertEqual(payload['terms'], 8)
    self.assertAlmostEqual(payload['fidelity'], 1.0)

  def test_dicke_bad_weights(self):
    code, _ = cli.run_command('dicke', ['4'], _options(weights='1=0.6'))
    self.assertEqual(code, 2)

  def test_convert(self):
    code, payload = cli.run_command('convert', ['121'], _options())
    self.assertEqual(code, 0)
    self.assertEqual(payload['mode_list'], [0, 1, 1, 2])
    inverse = _options(inverse=True, modes=3)
    _, payload = cli.run_command('convert', ['0112'], inverse)
    self.assertEqual(payload['occupation'], [1, 2, 1])

  def test_convert_symmetrized(self):
    options = _options(symmetrized=True)
    _, payload = cli.run_command('convert', ['21'], options)
    self.assertEqual(payload['mode_list'], [0, 0, 1])
    self.assertLen(payload['state']['terms'], 3)

  def test_convert_inverse_needs_modes(self):
    code, payload = cli.run_command('convert', ['0112'], _options(inverse=True))
    self.assertEqual(code, 2)
    self.assertIn('--modes', payload['error'])

  def test_les(self):
    code, payload = cli.run_command('les', ['121'], _options())
    self.assertEqual(code, 0)
    self.assertEqual(payload['permutation'], [3, 1, 2])
    _, payload = cli.run_command('les', ['312'], _options(inverse=True))
    self.assertEqual(payload['les'], [1, 2, 1])
    self.assertIsNone(payload['manifest']['depth'])

  def test_telescope(self):
    path = os.path.join(self.create_tempdir().full_path, 'out.csv')
    options = _options(grid=('1', '3'), csv=path, seed=5)
    code, payload = cli.run_command('telescope', [], options)
    self.assertEqual(code, 0)
    self.assertEqual(payload['recovered'], [1, 3])
    self.assertAlmostEqual(payload['multiset_distribution']['1 3'], 1.0)
    self.assertEqual(payload['manifest']['seed'], 5)
    self.assertTrue(os.path.exists(path))

  def test_telescope_off_grid(self):
    options = _options(photons=('0.1', '0.4'), detectors=3)
    code, payload = cli.run_command('telescope', [], options)
    self.assertEqual(code, 0)
    self.assertAlmostEqual(sum(payload['distribution'].values()), 1.0)

  def test_telescope_needs_angles(self):
    code, _ = cli.run_command('telescope', [], _options())
    self.assertEqual(code, 2)

  def test_unknown_command(self):
    code, payload = cli.run_command('sort', [], _options())
    self.assertEqual(code, 2)
    self.assertIn('Unknown command', payload['error'])

  def test_wrong_argument_count(self):
    code, payload = cli.run_command('les', ['1', '2'], _options())
    self.assertEqual(code, 2)
    self.assertIn('Usage', payload['error'])

  def test_invariant_violation(self):
    def broken(args, options):
      del args, options
      raise checks.InvariantViolation('record\nnot clean')

    with mock.patch.dict(cli.COMMANDS, {'broken': broken}):
      code, payload = cli.run_command('broken', [], _options())
    self.assertEqual(code, 3)
    self.assertEqual(payload['error'], 'record not clean')


class OutputTest(parameterized.TestCase):

  def test_output_dir(self):
    output_dir = self.create_tempdir().full_path
    code, payload = cli.run_command(
        'symmetrize', ['011'], _options(output_dir=output_dir)
    )
    self.assertEqual(code, 0)
    for name in ('state.json', 'result.json', 'manifest.json'):
      self.assertTrue(os.path.exists(os.path.join(output_dir, name)))
    with open(os.path.join(output_dir, 'state.json')) as f:
      state = state_lib.SparseState.from_json(f.read())
    self.assertLen(state, 3)
    with open(os.path.join(output_dir, 'manifest.json')) as f:
      manifest = json.load(f)
    self.assertEqual(manifest['arguments'], ['011'])
    self.assertLen(manifest['outputs'], 2)
    self.assertEqual(payload['manifest']['outputs'], manifest['outputs'])

  def test_unwritable_manifest(self):
    output_dir = self.create_tempdir()
    output_dir.mkdir('manifest.json')
    code, payload = cli.run_command(
        'symmetrize', ['011'], _options(output_dir=output_dir.full_path)
    )
    self.assertEqual(code, 2)
    self.assertIn('manifest.json', payload['error'])

  def test_main(self):
    with flagsaver.flagsaver(quiet=True):
      self.assertEqual(cli.main(['prog', 'les', '121']), 0)
      self.assertEqual(cli.main(['prog', 'les', '1x']), 2)
    with self.assertRaises(app.UsageError):
      cli.main(['prog'])


if __name__ == '__main__':
  absltest.main()
