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

"""Command-line entry point.

Usage:
  quantum-symmetrization <command> <argument>... [--flags]

Commands:
  symmetrize LIST|STATE.json  symmetrize a list or a saved state (--mode)
  dicke N [K]                 a Dicke state, or a superposition (--weights)
  convert LIST                occupation vector -> mode list (--inverse)
  les LIST                    LES -> permutation image (--inverse)
  telescope                   image photons (--grid or --photons)

Lists are written either as digits (122) or comma separated (1,2,2). Results
are printed as JSON, or written with a run manifest to --output_dir. Exit
codes: 0 on success, 2 on invalid input, 3 on a violated internal invariant.
"""

from collections.abc import Callable, Sequence
import dataclasses
import enum
import hashlib
import os
import time
from typing import Any

from absl import app
from absl import flags
from absl import logging
import pydantic

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import interferometry
from quantum_symmetrization import les
from quantum_symmetrization import permutations
from quantum_symmetrization import quantize_convert
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.symmetrize import berry
from quantum_symmetrization.symmetrize import dicke
from quantum_symmetrization.symmetrize import exact
from quantum_symmetrization.symmetrize import nsil
from quantum_symmetrization.symmetrize import oracle
from quantum_symmetrization.symmetrize import registers


class SymmetrizeMode(enum.Enum):
  SINGLE = 'single'
  SUPERPOSED = 'superposed'
  SIL_EXACT = 'sil-exact'
  SIL_BERRY = 'sil-berry'


_DEFAULT_SEED = int(os.environ.get('QSYM_SEED', '0'))

_MODE = flags.DEFINE_enum(
    'mode',
    SymmetrizeMode.SUPERPOSED.value,
    [m.value for m in SymmetrizeMode],
    'Symmetrization algorithm.',
)
_NETWORK = flags.DEFINE_enum(
    'network',
    networks.NetworkKind.BITONIC.value,
    [k.value for k in networks.NetworkKind],
    'Comparator network.',
)
_RESOURCE = flags.DEFINE_enum(
    'resource',
    nsil.ResourceKind.EXACT.value,
    [r.value for r in nsil.ResourceKind],
    'Preparation of the permutation resource state.',
)
_A = flags.DEFINE_float('a', 3.0, 'Padding exponent of sil-berry.')
_PADDING = flags.DEFINE_integer(
    'padding', None, 'Explicit sample range of sil-berry.'
)
_POSTSELECT = flags.DEFINE_bool(
    'postselect', False, 'Project out the repetitive branch of sil-berry.'
)
_SEED = flags.DEFINE_integer(
    'seed', _DEFAULT_SEED, 'Seed of sampled outcomes; defaults to $QSYM_SEED.'
)
_WEIGHTS = flags.DEFINE_string(
    'weights', None, 'Dicke weights as k:w pairs, e.g. 1:0.6,3:0.8.'
)
_DETECTORS = flags.DEFINE_integer('detectors', 4, 'Number of detectors.')
_SPACING = flags.DEFINE_float('spacing', 1.0, 'Detector spacing.')
_WAVELENGTH = flags.DEFINE_float('wavelength', 1.0, 'Photon wavelength.')
_OFFSET = flags.DEFINE_integer('offset', 0, 'Field-of-view offset.')
_PHOTONS = flags.DEFINE_list('photons', None, 'Photon angles in radians.')
_GRID = flags.DEFINE_list('grid', None, 'Photon angles as grid bins.')
_INVERSE = flags.DEFINE_bool(
    'inverse', False, 'Run convert or les backward.'
)
_MODES = flags.DEFINE_integer(
    'modes', None, 'Number of modes for convert --inverse.'
)
_SYMMETRIZED = flags.DEFINE_bool(
    'symmetrized', False, 'Also output the symmetrized state of convert.'
)
_OUTPUT_DIR = flags.DEFINE_string(
    'output_dir', None, 'Directory for result, state and manifest files.'
)
_CSV = flags.DEFINE_string(
    'csv', None, 'Path of a CSV of the telescope distribution.'
)
_QUIET = flags.DEFINE_bool('quiet', False, 'Do not echo the run manifest.')


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class CliOptions:
  """The parsed flags; see the flag definitions for their meaning."""

  mode: SymmetrizeMode = SymmetrizeMode.SUPERPOSED
  network: networks.NetworkKind = networks.NetworkKind.BITONIC
  resource: nsil.ResourceKind = nsil.ResourceKind.EXACT
  a: float = 3.0
  padding: int | None = None
  postselect: bool = False
  seed: int = 0
  weights: str | None = None
  detectors: int = 4
  spacing: float = 1.0
  wavelength: float = 1.0
  offset: int = 0
  photons: tuple[str, ...] | None = None
  grid: tuple[str, ...] | None = None
  inverse: bool = False
  modes: int | None = None
  symmetrized: bool = False
  output_dir: str | None = None
  csv: str | None = None
  quiet: bool = False

  @classmethod
  def from_flags(cls) -> 'CliOptions':
    return cls(
        mode=SymmetrizeMode(_MODE.value),
        network=networks.NetworkKind(_NETWORK.value),
        resource=nsil.ResourceKind(_RESOURCE.value),
        a=_A.value,
        padding=_PADDING.value,
        postselect=_POSTSELECT.value,
        seed=_SEED.value,
        weights=_WEIGHTS.value,
        detectors=_DETECTORS.value,
        spacing=_SPACING.value,
        wavelength=_WAVELENGTH.value,
        offset=_OFFSET.value,
        photons=None if _PHOTONS.value is None else tuple(_PHOTONS.value),
        grid=None if _GRID.value is None else tuple(_GRID.value),
        inverse=_INVERSE.value,
        modes=_MODES.value,
        symmetrized=_SYMMETRIZED.value,
        output_dir=_OUTPUT_DIR.value,
        csv=_CSV.value,
        quiet=_QUIET.value,
    )


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class RunManifest:
  """What was run, enough to reproduce its output.

  Attributes:
    command: The command name.
    arguments: Its positional arguments.
    parameters: The options the command depends on.
    seed: The seed of sampled outcomes.
    depth: The depth report of the circuit, if the command has one.
    timing_seconds: Wall time of the run; not part of the fingerprint.
    outputs: Files written by the run.
  """

  command: str
  arguments: tuple[str, ...]
  parameters: dict[str, Any]
  seed: int
  depth: dict[str, int] | None = None
  timing_seconds: float = pydantic.Field(default=0.0, ge=0)
  outputs: tuple[str, ...] = ()

  def to_dict(self) -> dict[str, Any]:
    return _MANIFEST_ADAPTER.dump_python(self, mode='json')

  def fingerprint(self) -> str:
    """SHA-256 of the manifest with its timing cleared."""
    untimed = dataclasses.replace(self, timing_seconds=0.0)
    return hashlib.sha256(_MANIFEST_ADAPTER.dump_json(untimed)).hexdigest()


_MANIFEST_ADAPTER = pydantic.TypeAdapter(RunManifest)
_PAYLOAD_ADAPTER = pydantic.TypeAdapter(dict[str, Any])

Payload = dict[str, Any]
Handler = Callable[
    [Sequence[str], CliOptions], tuple[Payload, depth.DepthReport | None]
]


def parse_ints(text: str) -> tuple[int, ...]:
  """'122' or '1,2,2' -> (1, 2, 2)."""
  text = text.strip()
  try:
    if ',' in text:
      return tuple(int(v) for v in text.split(','))
    if text and not text.isdigit():
      raise ValueError(text)
    return tuple(int(v) for v in text)
  except ValueError:
    raise ValueError(f'Cannot parse {text!r} as a list of integers') from None


def _parse_weights(text: str) -> dict[int, float]:
  weights = {}
  for pair in text.split(','):
    k, sep, w = pair.partition(':')
    if not sep:
      raise ValueError(f'Weights must be k:w pairs, found {pair!r}')
    weights[int(k)] = float(w)
  return weights


def _expect_args(args: Sequence[str], count: int, usage: str):
  if len(args) != count:
    raise ValueError(f'Usage: {usage}')


def _fidelity(a: state_lib.SparseState, b: state_lib.SparseState) -> float:
  return a.fidelity(b) / (a.norm() ** 2 * b.norm() ** 2)


def _outcome_key(outcome: Sequence[int]) -> str:
  return ' '.join(map(str, outcome))


def _symmetrize(
    args: Sequence[str], options: CliOptions
) -> tuple[Payload, depth.DepthReport]:
  _expect_args(args, 1, 'symmetrize LIST|STATE.json')
  kind, mode = options.network, options.mode
  if args[0].endswith('.json'):
    with open(args[0]) as f:
      state = state_lib.SparseState.from_json(f.read())
    values = None
  else:
    values = parse_ints(args[0])
    state = state_lib.SparseState.single_register(
        registers.DATA, {values: 1.0}
    )
  n = state.layout[registers.DATA].arity
  payload = {'mode': mode.value}
  match mode:
    case SymmetrizeMode.SINGLE:
      if values is None:
        raise ValueError('Mode single symmetrizes one list, not a state.')
      out = nsil.discard_ancillas(
          nsil.nsil_symmetrize_single(
              values, kind=kind, resource=options.resource
          )
      )
      report = nsil.single_input_depth(n, kind)
    case SymmetrizeMode.SUPERPOSED:
      out = nsil.nsil_symmetrize_superposed(
          state, kind=kind, resource=options.resource
      )
      report = nsil.superposed_depth(n, kind)
    case SymmetrizeMode.SIL_EXACT:
      out = exact.exact_sil_symmetrize(state, kind=kind)
      report = exact.exact_sil_depth(n, kind)
    case SymmetrizeMode.SIL_BERRY:
      cfg = berry.BerryConfig(
          a=options.a, f_n=options.padding, postselect=options.postselect
      )
      output = berry.berry_sil_symmetrize(state, cfg, kind=kind)
      out = output.state
      payload['fidelity_bound'] = output.fidelity_bound
      payload['success_probability'] = output.success_probability
      report = berry.berry_depth(n, cfg.padding(n), kind)
  target = oracle.oracle_state(state)
  if out.layout == target.layout:
    payload['fidelity'] = _fidelity(target, out)
  else:
    payload['fidelity'] = out.marginal_fidelity(target.normalized())
  payload['terms'] = len(out)
  payload['state'] = out.to_dict()
  return payload, report


def _dicke(
    args: Sequence[str], options: CliOptions
) -> tuple[Payload, depth.DepthReport]:
  kind = options.network
  if options.weights:
    _expect_args(args, 1, 'dicke N --weights=k:w,...')
    n = int(args[0])
    weights = _parse_weights(options.weights)
    out = dicke.dicke_superposition(n, weights, kind)
    target = None
    for k, w in weights.items():
      term = dicke.dicke_oracle(n, k).scaled(w)
      target = term if target is None else target.added(term)
    report = nsil.superposed_depth(n, kind)
  else:
    _expect_args(args, 2, 'dicke N K')
    n, k = int(args[0]), int(args[1])
    out = dicke.dicke(n, k, kind)
    target = dicke.dicke_oracle(n, k)
    report = nsil.single_input_depth(n, kind)
  payload = {
      'n': n,
      'terms': len(out),
      'fidelity': _fidelity(target, out),
      'state': out.to_dict(),
  }
  return payload, report


def _convert(
    args: Sequence[str], options: CliOptions
) -> tuple[Payload, depth.DepthReport]:
  _expect_args(args, 1, 'convert LIST')
  values = parse_ints(args[0])
  kind = options.network
  if options.inverse:
    if options.modes is None:
      raise ValueError('convert --inverse needs --modes.')
    counts = quantize_convert.nsil_to_occ(values, options.modes, kind=kind)
    payload = {'mode_list': list(values), 'occupation': list(counts)}
    return payload, quantize_convert.converter_depth(
        len(values), options.modes, kind
    )
  mode_list = quantize_convert.occ_to_nsil(values, kind=kind)
  payload = {'occupation': list(values), 'mode_list': list(mode_list)}
  if options.symmetrized:
    occupation = state_lib.SparseState.single_register(
        registers.OCCUPATION, {values: 1.0}, len(mode_list)
    )
    out = quantize_convert.second_to_first(occupation, kind=kind)
    payload['state'] = out.to_dict()
  return payload, quantize_convert.converter_depth(
      len(mode_list), len(values), kind
  )


def _les(
    args: Sequence[str], options: CliOptions
) -> tuple[Payload, depth.DepthReport | None]:
  _expect_args(args, 1, 'les LIST')
  values = parse_ints(args[0])
  if options.inverse:
    image = permutations.Permutation(values)
    payload = {'permutation': list(values), 'les': list(les.perm_to_les(image))}
    return payload, None
  image = les.les_to_perm_parallel(values, options.network).image
  payload = {'les': list(values), 'permutation': list(image)}
  return payload, les.les_to_perm_depth(len(values), options.network)


def _telescope(
    args: Sequence[str], options: CliOptions
) -> tuple[Payload, depth.DepthReport | None]:
  _expect_args(args, 0, 'telescope --grid=K,... | --photons=THETA,...')
  cfg = interferometry.ArrayConfig(
      detectors=options.detectors,
      spacing=options.spacing,
      wavelength=options.wavelength,
      offset=options.offset,
  )
  if options.grid is not None:
    angles = interferometry.PhotonAngles.from_bins(
        cfg, [int(k) for k in options.grid]
    )
  elif options.photons is not None:
    angles = interferometry.PhotonAngles.from_thetas(
        [float(t) for t in options.photons]
    )
  else:
    raise ValueError('telescope needs --grid or --photons.')
  result = interferometry.image_pipeline(
      cfg, angles, kind=options.network, seed=options.seed
  )
  if options.csv:
    interferometry.write_distribution_csv(result.distribution, options.csv)
  payload = {
      'distribution': {
          _outcome_key(k): p for k, p in result.distribution.items()
      },
      'multiset_distribution': {
          _outcome_key(k): p for k, p in result.multiset_distribution.items()
      },
      'recovered': list(result.recovered),
      'outcome': list(result.outcome),
  }
  report = None
  if angles.n:
    report = quantize_convert.converter_depth(
        angles.n, cfg.detectors, options.network
    ) + nsil.superposed_depth(angles.n, options.network)
  return payload, report


COMMANDS: dict[str, Handler] = {
    'symmetrize': _symmetrize,
    'dicke': _dicke,
    'convert': _convert,
    'les': _les,
    'telescope': _telescope,
}

# Options each command's output depends on.
_PARAMETERS = {
    'symmetrize': ('mode', 'network', 'resource', 'a', 'padding', 'postselect'),
    'dicke': ('network', 'weights'),
    'convert': ('network', 'inverse', 'modes', 'symmetrized'),
    'les': ('network', 'inverse'),
    'telescope': (
        'network', 'detectors', 'spacing', 'wavelength', 'offset', 'photons',
        'grid',
    ),
}


def _one_line(error: Exception) -> str:
  return ' '.join(str(error).split())


def _write_outputs(payload: Payload, output_dir: str) -> tuple[str, ...]:
  os.makedirs(output_dir, exist_ok=True)
  written = []
  for name, content in (
      ('state.json', payload.get('state')),
      ('result.json', {k: v for k, v in payload.items() if k != 'state'}),
  ):
    if content is None:
      continue
    path = os.path.join(output_dir, name)
    with open(path, 'wb') as f:
      f.write(_PAYLOAD_ADAPTER.dump_json(content, indent=2))
    written.append(path)
  return tuple(written)


def run_command(
    command: str, args: Sequence[str], options: CliOptions
) -> tuple[int, Payload]:
  """Runs one command.

  Args:
    command: One of `COMMANDS`.
    args: The positional arguments of the command.
    options: The parsed options.

  Returns:
    The exit code and the JSON payload. On success the payload holds the
    command's result and its `manifest`; on failure it holds the `error`.
  """
  start = time.perf_counter()
  try:
    if command not in COMMANDS:
      raise ValueError(
          f'Unknown command {command!r}; expected one of {sorted(COMMANDS)}'
      )
    payload, report = COMMANDS[command](args, options)
    outputs = ()
    if options.output_dir:
      outputs = _write_outputs(payload, options.output_dir)
    option_values = dataclasses.asdict(options)
    manifest = RunManifest(
        command=command,
        arguments=tuple(args),
        parameters={
            name: getattr(option_values[name], 'value', option_values[name])
            for name in _PARAMETERS[command]
        },
        seed=options.seed,
        depth=None if report is None else report.as_dict(),
        timing_seconds=time.perf_counter() - start,
        outputs=outputs,
    )
    if options.output_dir:
      path = os.path.join(options.output_dir, 'manifest.json')
      with open(path, 'wb') as f:
        f.write(_MANIFEST_ADAPTER.dump_json(manifest, indent=2))
  except checks.InvariantViolation as e:
    logging.error('%s: internal invariant violated: %s', command, _one_line(e))
    return 3, {'error': _one_line(e)}
  except (ValueError, OverflowError, OSError) as e:
    logging.error('%s: %s', command, _one_line(e))
    return 2, {'error': _one_line(e)}

  payload['manifest'] = manifest.to_dict()
  payload['manifest']['fingerprint'] = manifest.fingerprint()
  return 0, payload


def main(argv: Sequence[str]) -> int:
  if len(argv) < 2:
    raise app.UsageError(f'Expected a command, one of {sorted(COMMANDS)}')
  options = CliOptions.from_flags()
  code, payload = run_command(argv[1], argv[2:], options)
  if code == 0 and not options.output_dir:
    if options.quiet:
      payload.pop('manifest')
    print(_PAYLOAD_ADAPTER.dump_json(payload, indent=2).decode())
  return code


def run():
  app.run(main)


if __name__ == '__main__':
  run()
