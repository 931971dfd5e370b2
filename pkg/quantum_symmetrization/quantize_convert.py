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

"""Reversible conversion between occupation numbers and mode lists.

An occupation vector (n_0, ..., n_{m-1}) of n particles in m modes is turned
into the NSIL 0^{n_0} 1^{n_1} ... (m-1)^{n_{m-1}} with reversible sorting
and local updates only. Every mode i becomes a triple (i, n_i, S_i), S_i the
inclusive prefix sum, and n fresh triples (m, 0, j) are appended. Sorting by
the third value slots the n_i fresh triples of mode i right before mode i's
triple, so a fresh triple at position k with index j belongs to mode k - j.
The remaining stages remove the scaffolding:

  stage  rule        step
  W1     -           (i, n_i, S_i) by prefix sums
  W2     W2          append (m, 0, j), j = 0..n-1
  W3     W3          REVSORT W2 -> W3
  W4     W3          fresh triples: b += k - c
  W5     W2          REVSORT W3 -> W2
  W6     W2          mode triples: b -= c_k - c_{k-1}
  W7     W3          REVSORT W2 -> W3
  W8     MODE_MAJOR  mode triples: c -= k - a
  Wf     W2          REVSORT MODE_MAJOR -> W2, then strip

W2 orders by the first value, and fresh triples by their index. W3 orders by
the third value, then the first. Once the prefix sums are cleared in W8 the
list is no longer W3-sorted, but it is sorted by mode with every mode's
triple after its particles, which is the MODE_MAJOR rule.

Example Usage:
  >>> occ_to_nsil((1, 2, 1))
  (0, 1, 1, 2)
  >>> nsil_to_occ((0, 1, 1, 2), 3)
  (1, 2, 1)
"""

import collections
from collections.abc import Sequence
import dataclasses
import functools
import math

from absl import logging

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import permutations
from quantum_symmetrization import prefix_scan
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.sorting import rules
from quantum_symmetrization.symmetrize import nsil
from quantum_symmetrization.symmetrize import registers


Triple = tuple[int, int, int]

W3_RULE = rules.by_key('w3', 3, lambda t: (t[2], t[0]))


def w2_rule(m: int) -> rules.ComparisonRule:
  return rules.by_key(
      f'w2(m={m})', 3, lambda t: (t[0], t[2] if t[0] == m else 0)
  )


def mode_major_rule(m: int) -> rules.ComparisonRule:
  return rules.by_key(
      f'mode_major(m={m})',
      3,
      lambda t: (t[1], 0, t[2]) if t[0] == m else (t[0], 1, t[2]),
  )


@dataclasses.dataclass(frozen=True)
class StagedTripleList:
  """The triple list after one stage of the conversion.

  Attributes:
    stage: Name of the stage, W1 to W8 or Wf.
    entries: The triples (a, b, c).
    rule: The order the entries are strictly sorted in, if any.
  """

  stage: str
  entries: tuple[Triple, ...]
  rule: rules.ComparisonRule | None = None

  def __post_init__(self):
    object.__setattr__(
        self, 'entries', tuple(tuple(t) for t in self.entries)
    )
    if self.rule is not None and not self.rule.is_sorted(self.entries):
      raise checks.InvariantViolation(
          f'Stage {self.stage} is not sorted under {self.rule.name}:'
          f' {self.entries}'
      )


def check_occupation(counts: Sequence[int]) -> tuple[int, ...]:
  counts = tuple(counts)
  checks.check_non_negative_ints(counts, 'occupation')
  if not counts:
    raise ValueError('At least one mode is required.')
  if not sum(counts):
    raise ValueError(f'Occupation {counts} holds no particles.')
  return counts


def naive_occ_to_nsil(counts: Sequence[int]) -> tuple[int, ...]:
  """Repeats mode i n_i times."""
  return tuple(i for i, c in enumerate(counts) for _ in range(c))


def naive_nsil_to_occ(values: Sequence[int], m: int) -> tuple[int, ...]:
  tally = collections.Counter(values)
  return tuple(tally[i] for i in range(m))


class _Stages:
  """Collects the stages of one conversion, checking each on entry."""

  def __init__(self):
    self.stages: list[StagedTripleList] = []

  def push(
      self,
      stage: str,
      entries,
      rule: rules.ComparisonRule | None = None,
  ) -> tuple[Triple, ...]:
    self.stages.append(StagedTripleList(stage, tuple(entries), rule))
    logging.debug('Stage %s: %s', stage, self.stages[-1].entries)
    return self.stages[-1].entries


def _shift_fresh(t: Sequence[Triple], m: int, sign: int) -> list[Triple]:
  """Fresh triple at position k: b += sign * (k - c)."""
  return [
      (a, b + sign * (k - c), c) if a == m else (a, b, c)
      for k, (a, b, c) in enumerate(t)
  ]


def _shift_occupations(
    t: Sequence[Triple], m: int, sign: int
) -> list[Triple]:
  """Mode triples, the first m entries: b += sign * (c_k - c_{k-1})."""
  sums = [c for _, _, c in t[:m]]
  deltas = [c - p for c, p in zip(sums, [0] + sums)]
  head = [(a, b + sign * d, c) for (a, b, c), d in zip(t[:m], deltas)]
  return head + list(t[m:])


def _shift_prefix_sums(
    t: Sequence[Triple], m: int, sign: int
) -> list[Triple]:
  """Mode triple at position k: c += sign * (k - a)."""
  return [
      (a, b, c + sign * (k - a)) if a < m else (a, b, c)
      for k, (a, b, c) in enumerate(t)
  ]


def occ_to_nsil(
    counts: Sequence[int],
    *,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    bits: int | None = None,
    trace: bool = False,
):
  """Converts an occupation vector to its mode list.

  Args:
    counts: The occupation numbers n_0..n_{m-1}, with at least one particle.
    kind: The sorting network used by every REVSORT.
    bits: Register width of the prefix sums, by default wide enough.
    trace: Whether to also return every intermediate stage.

  Returns:
    The NSIL 0^{n_0} ... (m-1)^{n_{m-1}}, and with `trace` the tuple of
    `StagedTripleList`s from W1 to Wf.

  Raises:
    ValueError: If the occupation vector is invalid.
    OverflowError: If the prefix sums do not fit in `bits`.
    InvariantViolation: If a stage breaks its sortedness invariant or the
      scaffolding is not cleared.
  """
  counts = check_occupation(counts)
  m, n = len(counts), sum(counts)
  network = networks.build_network(kind, m + n)
  w2, w3, w8 = w2_rule(m), W3_RULE, mode_major_rule(m)
  revsort = functools.partial(operations.revsort_values, network=network)
  log = _Stages()

  sums = prefix_scan.prefix_sums(counts, bits)
  t = log.push('W1', zip(range(m), counts, sums))
  t = log.push('W2', t + tuple((m, 0, j) for j in range(n)), w2)
  t = log.push('W3', revsort(t, w2, w3), w3)
  t = log.push('W4', _shift_fresh(t, m, 1), w3)
  t = log.push('W5', revsort(t, w3, w2), w2)
  t = log.push('W6', _shift_occupations(t, m, -1), w2)
  if any(b for _, b, _ in t[:m]):
    raise checks.InvariantViolation(f'Occupations not cleared in W6: {t}')
  t = log.push('W7', revsort(t, w2, w3), w3)
  t = log.push('W8', _shift_prefix_sums(t, m, -1), w8)
  t = log.push('Wf', revsort(t, w8, w2), w2)

  if t[:m] != tuple((i, 0, 0) for i in range(m)) or any(
      (a, c) != (m, j) for j, (a, _, c) in enumerate(t[m:])
  ):
    raise checks.InvariantViolation(f'Scaffolding not cleared in Wf: {t}')
  values = tuple(b for _, b, _ in t[m:])
  return (values, tuple(log.stages)) if trace else values


def nsil_to_occ(
    values: Sequence[int],
    m: int,
    *,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
    bits: int | None = None,
    trace: bool = False,
):
  """Runs the stages of `occ_to_nsil` backward.

  Args:
    values: A non-empty NSIL over the modes 0..m-1.
    m: Number of modes.
    kind: The sorting network used by every REVSORT.
    bits: Register width of the prefix sums.
    trace: Whether to also return every intermediate stage, from Wf to W1.

  Returns:
    The occupation vector, and with `trace` the stages.

  Raises:
    ValueError: If `values` is not an NSIL over 0..m-1.
    InvariantViolation: If the scaffolding is not restored.
  """
  values = tuple(values)
  checks.check_nsil(values, 'mode list')
  if not values:
    raise ValueError('The mode list holds no particles.')
  if m < 1 or values[-1] >= m:
    raise ValueError(f'Modes of {values} must lie in [0, {m}), m = {m}')
  n = len(values)
  network = networks.build_network(kind, m + n)
  w2, w3, w8 = w2_rule(m), W3_RULE, mode_major_rule(m)
  revsort = functools.partial(operations.revsort_values, network=network)
  log = _Stages()

  t = log.push(
      'Wf',
      tuple((i, 0, 0) for i in range(m))
      + tuple((m, v, j) for j, v in enumerate(values)),
      w2,
  )
  t = log.push('W8', revsort(t, w2, w8), w8)
  t = log.push('W7', _shift_prefix_sums(t, m, 1), w3)
  t = log.push('W6', revsort(t, w3, w2), w2)
  t = log.push('W5', _shift_occupations(t, m, 1), w2)
  t = log.push('W4', revsort(t, w2, w3), w3)
  t = log.push('W3', _shift_fresh(t, m, -1), w3)
  t = log.push('W2', revsort(t, w3, w2), w2)
  if t[m:] != tuple((m, 0, j) for j in range(n)):
    raise checks.InvariantViolation(f'Fresh triples not restored in W2: {t}')
  t = log.push('W1', t[:m])

  counts = tuple(b for _, b, _ in t)
  if prefix_scan.unprefix_sums([c for _, _, c in t], bits) != counts:
    raise checks.InvariantViolation(f'Prefix sums do not uncompute: {t}')
  return (counts, tuple(log.stages)) if trace else counts


def converter_depth(
    n: int, m: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  """Prefix sums, four REVSORTs over m + n triples and five local updates."""
  network = networks.build_network(kind, m + n)
  bits = prefix_scan.default_bits(m, n)
  return (
      prefix_scan.prefix_sums_depth(m, bits)
      + operations.revsort_depth(network).repeated(4)
      + depth.DepthReport(elementary_layers=5)
  ).with_ancillas(3 * (m + n) * bits)


def _particle_number(state: state_lib.SparseState, register: str) -> int:
  i = state.layout.index(register)
  numbers = {sum(config[i]) for config in state.terms}
  if len(numbers) != 1:
    raise ValueError(
        f'Support has inconsistent particle numbers {sorted(numbers)}'
    )
  return numbers.pop()


def second_to_first(
    state: state_lib.SparseState,
    *,
    register: str = registers.OCCUPATION,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """Converts occupation vectors to symmetrized mode lists.

  Args:
    state: A state whose `register` holds occupation vectors of a common
      particle number n.
    register: The occupation register, replaced by the data register.
    kind: The sorting network.

  Returns:
    The state with a data register of n modes, symmetrized.

  Raises:
    ValueError: If the particle number varies across the support.
  """
  n = _particle_number(state, register)
  m = state.layout[register].arity
  i = state.layout.index(register)
  layout = state.layout.replaced(
      register, state_lib.Register(registers.DATA, n, m - 1)
  )
  out = state.lift(
      lambda config: state_lib.with_register(
          config, i, occ_to_nsil(config[i], kind=kind)
      ),
      layout,
      name='occ->NSIL',
  )
  logging.info('Converted %d occupation vectors of %d particles', len(out), n)
  return nsil.nsil_symmetrize_superposed(out, kind=kind)


def symmetric_mass(
    state: state_lib.SparseState, data: str = registers.DATA
) -> float:
  """Squared norm of the projection onto permutation-invariant states."""
  i = state.layout.index(data)
  orbits = collections.defaultdict(complex)
  for config, amplitude in state.terms.items():
    orbits[
        state_lib.with_register(config, i, tuple(sorted(config[i])))
    ] += amplitude
  return math.fsum(
      abs(total) ** 2 / permutations.multinomial(config[i])
      for config, total in orbits.items()
  )


def first_to_second(
    state: state_lib.SparseState,
    m: int,
    *,
    data: str = registers.DATA,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """The inverse of `second_to_first`.

  Args:
    state: A symmetrized state whose `data` register holds mode lists.
    m: Number of modes.
    data: The data register, replaced by the occupation register.
    kind: The sorting network.

  Returns:
    The state over an occupation register of m modes.

  Raises:
    ValueError: If the input is not permutation invariant.
  """
  mass = symmetric_mass(state, data)
  total = state.norm() ** 2
  if mass < (1 - state_lib.NORM_ATOL) * total:
    raise ValueError(
        f'State is not symmetric: symmetric sector holds {mass / total:.12f}'
        ' of its norm'
    )
  out = nsil.unsymmetrize(state, data=data, kind=kind)
  n = out.layout[data].arity
  i = out.layout.index(data)
  layout = out.layout.replaced(
      data, state_lib.Register(registers.OCCUPATION, m, n)
  )
  return out.lift(
      lambda config: state_lib.with_register(
          config, i, nsil_to_occ(config[i], m, kind=kind)
      ),
      layout,
      name='NSIL->occ',
  )
