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

"""Interferometric imaging with a line of m quantum telescopes.

A photon arriving at angle theta reaches detector j with phase
2 pi d j sin(theta) / lambda, so its state over the detector memories is a
phase ramp. A Fourier transform of the detector index maps the ramp to the
bin k with sin(theta) = k lambda / (m d) + v lambda / d, v the integer
field-of-view offset. For n photons the memories hold an occupation vector;
converting it to a mode list, symmetrizing, and transforming every particle
slot recovers the multiset of bins.

Angles given as bins are on the grid, where recovery is exact. Other angles
leak probability into neighbouring bins.

Example Usage:
  >>> cfg = ArrayConfig(detectors=4, spacing=1.0, wavelength=1.0)
  >>> result = image_pipeline(cfg, PhotonAngles.from_bins(cfg, (1, 3)))
  >>> result.recovered
  (1, 3)
"""

import collections
from collections.abc import Mapping, Sequence
import csv
import dataclasses
import itertools
import math
import os
from typing import NamedTuple

from absl import logging
import numpy as np
import pydantic

from quantum_symmetrization import checks
from quantum_symmetrization import quantize_convert
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.symmetrize import registers


Distribution = dict[tuple[int, ...], float]


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class ArrayConfig:
  """A line of equally spaced detectors.

  Attributes:
    detectors: The number of detectors m.
    spacing: Distance d between adjacent detectors.
    wavelength: Photon wavelength, in the units of `spacing`.
    offset: Integer v selecting the field of view
      [v lambda / d, (v + 1) lambda / d) in sin(theta).
  """

  detectors: int = pydantic.Field(ge=2)
  spacing: float = pydantic.Field(gt=0)
  wavelength: float = pydantic.Field(gt=0)
  offset: int = 0

  @property
  def field_of_view(self) -> float:
    return self.wavelength / self.spacing

  @property
  def resolution(self) -> float:
    """Angular resolution lambda / (m d), in sin(theta)."""
    return self.wavelength / (self.detectors * self.spacing)


def angle_from_k(cfg: ArrayConfig, k: int) -> float:
  """sin(theta) of the grid bin k."""
  if not 0 <= k < cfg.detectors:
    raise ValueError(f'Bin must lie in [0, {cfg.detectors}), found {k}')
  return k * cfg.resolution + cfg.offset * cfg.field_of_view


def k_from_angle(cfg: ArrayConfig, sine: float) -> float:
  """The (fractional) bin of sin(theta); the inverse of `angle_from_k`."""
  return (sine - cfg.offset * cfg.field_of_view) / cfg.resolution


@dataclasses.dataclass(frozen=True)
class PhotonAngles:
  """The arrival angles of n photons.

  Attributes:
    sines: sin(theta_i) of every photon.
    bins: The grid bins k_i, for angles on the grid.
  """

  sines: tuple[float, ...]
  bins: tuple[int, ...] | None = None

  def __post_init__(self):
    object.__setattr__(self, 'sines', tuple(float(s) for s in self.sines))
    if any(not -1.0 <= s <= 1.0 for s in self.sines):
      raise ValueError(f'Sines must lie in [-1, 1], found {self.sines}')
    if self.bins is not None:
      object.__setattr__(self, 'bins', tuple(int(k) for k in self.bins))
      if len(self.bins) != len(self.sines):
        raise ValueError(
            f'Got {len(self.bins)} bins for {len(self.sines)} photons'
        )

  @classmethod
  def from_bins(cls, cfg: ArrayConfig, bins: Sequence[int]) -> 'PhotonAngles':
    return cls(tuple(angle_from_k(cfg, k) for k in bins), tuple(bins))

  @classmethod
  def from_thetas(cls, thetas: Sequence[float]) -> 'PhotonAngles':
    return cls(tuple(np.sin(np.asarray(thetas, dtype=float)).tolist()))

  @property
  def n(self) -> int:
    return len(self.sines)

  @property
  def on_grid(self) -> bool:
    return self.bins is not None

  def check_bins(self, cfg: ArrayConfig):
    """Checks that every bin k_i lies on the grid at sines[i]."""
    if self.bins is None:
      return
    expected = [angle_from_k(cfg, k) for k in self.bins]
    if not np.allclose(self.sines, expected, rtol=0.0, atol=1e-9):
      raise ValueError(
          f'Bins {self.bins} sit at sines {expected}, found {self.sines}'
      )

  def phase_turns(self, cfg: ArrayConfig) -> np.ndarray:
    """Phase of photon i at detector j in turns, reduced to [0, 1).

    Returns:
      An (n, m) array.

    Raises:
      ValueError: If the bins do not match the sines under `cfg`.
    """
    j = np.arange(cfg.detectors)
    if self.bins is not None:
      self.check_bins(cfg)
      # The offset contributes whole turns.
      return np.outer(self.bins, j) % cfg.detectors / cfg.detectors
    ramp = np.outer(self.sines, j) * cfg.spacing / cfg.wavelength
    return np.mod(ramp, 1.0)

  def permuted(self, order: Sequence[int]) -> 'PhotonAngles':
    bins = None if self.bins is None else tuple(self.bins[i] for i in order)
    return PhotonAngles(tuple(self.sines[i] for i in order), bins)


def _occupation_layout(m: int, n: int) -> state_lib.Layout:
  return state_lib.Layout((state_lib.Register(registers.OCCUPATION, m, n),))


def build_multiphoton_state(
    cfg: ArrayConfig, angles: PhotonAngles
) -> state_lib.SparseState:
  """prod_i a^dagger(theta_i) |0...0>, normalized, over occupation vectors.

  Each creation operator spreads one photon over the detectors with its
  phase ramp; adding a photon to a memory holding v photons contributes the
  bosonic factor sqrt(v + 1).

  Args:
    cfg: The detector array.
    angles: The photons.

  Returns:
    The normalized state over the occupation register.
  """
  m = cfg.detectors
  ramps = np.exp(2j * np.pi * angles.phase_turns(cfg))
  terms = {(0,) * m: 1.0 + 0j}
  for ramp in ramps:
    created = collections.defaultdict(complex)
    for occupation, amplitude in terms.items():
      for j in range(m):
        raised = occupation[:j] + (occupation[j] + 1,) + occupation[j + 1 :]
        created[raised] += amplitude * ramp[j] * math.sqrt(occupation[j] + 1)
    terms = created
  return state_lib.SparseState.from_terms(
      _occupation_layout(m, angles.n),
      [((occupation,), a) for occupation, a in terms.items()],
      normalize=True,
  )


def build_single_photon_state(
    cfg: ArrayConfig, angles: PhotonAngles
) -> state_lib.SparseState:
  """a^dagger(theta) |0...0>: amplitude e^{i phi_j} / sqrt(m) on e_j."""
  if angles.n != 1:
    raise ValueError(f'Expected one photon, found {angles.n}')
  return build_multiphoton_state(cfg, angles)


def photon_state_oracle(
    cfg: ArrayConfig, angles: PhotonAngles
) -> state_lib.SparseState:
  """Expands all m^n detection patterns r onto their occupation vectors."""
  m = cfg.detectors
  turns = angles.phase_turns(cfg)
  terms = []
  for r in itertools.product(range(m), repeat=angles.n):
    counts = collections.Counter(r)
    occupation = tuple(counts[j] for j in range(m))
    phase = np.exp(2j * np.pi * sum(turns[i, j] for i, j in enumerate(r)))
    bosonic = math.sqrt(math.prod(math.factorial(c) for c in occupation))
    terms.append(((occupation,), phase * bosonic))
  return state_lib.SparseState.from_terms(
      _occupation_layout(m, angles.n), terms, normalize=True
  )


def qft_register(
    state: state_lib.SparseState,
    register: str,
    slot: int,
    inverse: bool = False,
) -> state_lib.SparseState:
  """Fourier transforms one element of a register.

  The element ranges over [0, bound]; |j> maps to
  sum_k e^{-2 pi i j k / (bound + 1)} |k> / sqrt(bound + 1).

  Args:
    state: The state.
    register: Name of the register.
    slot: Position of the element within the register.
    inverse: Whether to apply the inverse transform.

  Returns:
    The transformed state.
  """
  i = state.layout.index(register)
  size = state.layout[register].bound + 1
  if not 0 <= slot < state.layout[register].arity:
    raise ValueError(f'Register {register} has no slot {slot}')

  def at(config, k):
    values = config[i]
    return state_lib.with_register(
        config, i, values[:slot] + (k,) + values[slot + 1 :]
    )

  columns = collections.defaultdict(lambda: np.zeros(size, dtype=complex))
  for config, amplitude in state.terms.items():
    columns[at(config, 0)][config[i][slot]] += amplitude
  transform = np.fft.ifft if inverse else np.fft.fft
  terms = []
  for key, column in columns.items():
    out = transform(column, norm='ortho')
    terms.extend((at(key, k), a) for k, a in enumerate(out))
  return state_lib.SparseState.from_terms(state.layout, terms)


def recover_multiset(
    distribution: Mapping[tuple[int, ...], float],
) -> Distribution:
  """Sums the probabilities of outcomes that agree up to ordering."""
  multisets = collections.defaultdict(float)
  for outcome, p in distribution.items():
    multisets[tuple(sorted(outcome))] += p
  return {k: multisets[k] for k in sorted(multisets)}


class ImageResult(NamedTuple):
  """Output of `image_pipeline`.

  Attributes:
    state: The final state over the data register, one slot per photon.
    distribution: Probability of every ordered outcome (k_1, ..., k_n).
    multiset_distribution: Probability of every sorted outcome.
    outcome: One sampled ordered outcome.
  """

  state: state_lib.SparseState
  distribution: Distribution
  multiset_distribution: Distribution
  outcome: tuple[int, ...]

  @property
  def recovered(self) -> tuple[int, ...]:
    """The most likely multiset of bins."""
    return max(
        self.multiset_distribution, key=self.multiset_distribution.get
    )


def image_pipeline(
    cfg: ArrayConfig,
    angles: PhotonAngles,
    *,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    seed: state_lib.RngType = None,
) -> ImageResult:
  """Detects n photons and reads out their bins.

  Builds the detected occupation state, converts it to a symmetrized mode
  list, Fourier transforms every slot and measures.

  Args:
    cfg: The detector array.
    angles: The photons.
    kind: The sorting network used by the conversion.
    seed: Seed of the sampled outcome.

  Returns:
    The final state, its outcome distributions and one sampled outcome.

  Raises:
    ValueError: If the angles are on the grid and the number of detectors is
      not a power of two.
  """
  m = cfg.detectors
  if angles.on_grid:
    checks.check_power_of_two(m, 'of the detector array')
  else:
    logging.warning(
        'Angles are off the grid; bins %s are not recovered exactly',
        np.round([k_from_angle(cfg, s) for s in angles.sines], 3).tolist(),
    )
  if not angles.n:
    vacuum = state_lib.SparseState.single_register(
        registers.DATA, {(): 1.0}, m - 1
    )
    return ImageResult(vacuum, {(): 1.0}, {(): 1.0}, ())

  out = quantize_convert.second_to_first(
      build_multiphoton_state(cfg, angles), kind=kind
  )
  for slot in range(angles.n):
    out = qft_register(out, registers.DATA, slot)
  distribution = out.distribution(registers.DATA)
  outcome, _ = out.measure(registers.DATA, seed)
  multisets = recover_multiset(distribution)
  logging.info(
      'Imaged %d photons on %d detectors: %d ordered outcomes, %d multisets',
      angles.n,
      m,
      len(distribution),
      len(multisets),
  )
  return ImageResult(out, distribution, multisets, outcome)


def pipeline_oracle_state(
    cfg: ArrayConfig, angles: PhotonAngles
) -> state_lib.SparseState:
  """The final state of `image_pipeline` computed densely.

  The symmetrized first-quantized state has amplitude
  beta_r = sum_sigma prod_i e^{i phi(theta_sigma(i), r_i)} on |r>; every slot
  is then Fourier transformed.

  Args:
    cfg: The detector array.
    angles: At least one photon.

  Returns:
    The normalized state over the data register.
  """
  m, n = cfg.detectors, angles.n
  ramps = np.exp(2j * np.pi * angles.phase_turns(cfg))
  beta = np.zeros((m,) * n, dtype=complex)
  for order in itertools.permutations(range(n)):
    product = ramps[order[0]]
    for i in order[1:]:
      product = np.multiply.outer(product, ramps[i])
    beta += product
  amplitudes = np.fft.fftn(beta, norm='ortho')
  terms = [
      ((r,), amplitudes[r])
      for r in itertools.product(range(m), repeat=n)
  ]
  layout = state_lib.Layout((state_lib.Register(registers.DATA, n, m - 1),))
  return state_lib.SparseState.from_terms(layout, terms, normalize=True)


def write_distribution_csv(
    distribution: Mapping[tuple[int, ...], float], path: str | os.PathLike
):
  """Writes `outcome,probability` rows, the outcome space separated."""
  with open(path, 'w', newline='') as f:
    writer = csv.writer(f)
    writer.writerow(['outcome', 'probability'])
    for outcome, p in distribution.items():
      writer.writerow([' '.join(map(str, outcome)), repr(p)])
