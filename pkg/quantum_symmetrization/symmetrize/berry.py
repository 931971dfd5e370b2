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

"""Probabilistic SIL symmetrization by sorting a random padding register.

A sample register holds n values drawn uniformly from [0, f). Sorting it
writes the record of the sorting permutation, and UNSORTing a strictly
increasing list with that record applies the same permutation to it. When
the samples are all distinct the record register is cleared and the data
register holds the uniform superposition over all n! rearrangements; a
sample with a repeated value (the repetitive branch) leaves trash behind.

The simulator never enumerates [0, f)^n. Two samples with the same rank
pattern (values relabeled to 0..j-1, preserving order and ties) drive every
comparator the same way, so each pattern stands for the C(f, j) j-subsets of
[0, f) and carries amplitude sqrt(C(f, j) / f^n). After sorting, the sample
register holds the sorted pattern, which labels the measured sector: the
label (0, 1, ..., n-1) is the non-repetitive branch.

Example Usage:
  >>> data = state_lib.SparseState.single_register('data', {(1, 2): 1.0})
  >>> out = berry_sil_symmetrize(
  ...     data, BerryConfig(f_n=100, postselect=True)
  ... )
  >>> round(out.success_probability, 6)
  0.99
"""

import functools
import itertools
import math
from typing import NamedTuple

from absl import logging
import pydantic
from scipy import special

from quantum_symmetrization import depth
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.symmetrize import registers


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class BerryConfig:
  """Configuration of `berry_sil_symmetrize`.

  Attributes:
    a: Padding exponent; the sample range is f_n = ceil(n^a). The repetitive
      branch has probability O(n^(2-a)).
    f_n: Explicit sample range, overriding `a`. Must be at least n^2.
    postselect: Whether to project out the repetitive branch.
  """

  a: float = pydantic.Field(default=3.0, ge=2)
  f_n: int | None = pydantic.Field(default=None, ge=1)
  postselect: bool = False

  def padding(self, n: int) -> int:
    """The sample range for lists of length n."""
    f = self.f_n if self.f_n is not None else math.ceil(n**self.a)
    if f < n * n:
      raise ValueError(f'f_n must be at least n^2 = {n * n}, found {f}')
    return f

  @classmethod
  def default(
      cls, n: int, a: float = 3.0, postselect: bool = False
  ) -> 'BerryConfig':
    return cls(
        a=a, f_n=max(math.ceil(n**a), n * n, 1), postselect=postselect
    )


class BerryOutput(NamedTuple):
  """Result of `berry_sil_symmetrize`.

  Attributes:
    state: The output state. With postselection it lives on the input layout;
      otherwise the sample and record registers are kept.
    fidelity_bound: Guaranteed fidelity of the data register with the
      symmetrized input, n! C(f, n) / f^n.
    success_probability: Probability of the non-repetitive branch.
  """

  state: state_lib.SparseState
  fidelity_bound: float
  success_probability: float


@functools.lru_cache(maxsize=None)
def rank_patterns(n: int) -> tuple[tuple[int, ...], ...]:
  """All lists of length n whose values are exactly 0..j-1 for some j."""
  return tuple(
      p
      for p in itertools.product(range(n), repeat=n)
      if set(p) == set(range(max(p) + 1))
  )


def non_repetitive_probability(n: int, f: int) -> float:
  """Probability that n uniform samples from [0, f) are distinct."""
  return float(
      math.factorial(n) * special.comb(f, n, exact=True) / f**n
  )


def sample_state(n: int, f: int) -> state_lib.SparseState:
  """Rank-pattern compression of the uniform state over [0, f)^n."""
  terms = [
      ((p,), math.sqrt(special.comb(f, max(p) + 1, exact=True) / f**n))
      for p in rank_patterns(n)
  ]
  layout = state_lib.Layout((state_lib.Register(registers.SAMPLE, n, n - 1),))
  return state_lib.SparseState.from_terms(layout, terms)


def berry_sil_symmetrize(
    state: state_lib.SparseState,
    cfg: BerryConfig | None = None,
    *,
    data: str = registers.DATA,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> BerryOutput:
  """Symmetrizes a superposition of SILs by sorting random samples.

  Args:
    state: A state whose register `data` holds SILs on every term.
    cfg: The configuration, by default `BerryConfig.default(n)`.
    data: The register to symmetrize.
    kind: The sorting network.

  Returns:
    The output state, the fidelity bound and the success probability.

  Raises:
    ValueError: If some term holds a list that is not an SIL, or the sample
      range is below n^2.
  """
  registers.check_sil_support(state, data)
  n = state.layout[data].arity
  cfg = cfg or BerryConfig.default(n)
  if n <= 1:
    return BerryOutput(state, 1.0, 1.0)
  f = cfg.padding(n)
  if f < n**3:
    logging.warning(
        'Sample range %d is below n^3 = %d; the repetitive branch has'
        ' probability up to %.3e',
        f,
        n**3,
        n * (n - 1) / (2 * f),
    )
  network = networks.build_network(kind, n)
  out = state.tensor(sample_state(n, f)).tensor(
      registers.zero_state(registers.record_register(network))
  )
  out = operations.sort_op(out, registers.SAMPLE, registers.RECORD, network)
  out = operations.unsort_op(out, data, registers.RECORD, network)

  label = tuple(range(n))
  i = out.layout.index(registers.SAMPLE)
  bound = non_repetitive_probability(n, f)
  success = sum(
      abs(a) ** 2 for c, a in out.terms.items() if c[i] == label
  ) / out.norm() ** 2
  logging.info(
      'Sampled symmetrization of %d terms, n=%d, f=%d: success probability'
      ' %.6f',
      len(state),
      n,
      f,
      success,
  )
  if not cfg.postselect:
    return BerryOutput(out, bound, success)

  out, _ = out.project(lambda config: config[i] == label)
  out = out.drop_registers(
      [registers.SAMPLE, registers.RECORD],
      expected={registers.SAMPLE: label, registers.RECORD: (0,) * network.size},
  )
  return BerryOutput(out, bound, success)


def repetitive_probability(output: BerryOutput) -> float:
  return 1.0 - output.success_probability


def berry_depth(
    n: int,
    f: int,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> depth.DepthReport:
  """One preparation layer, a SORT of the samples and an UNSORT of the data."""
  network = networks.build_network(kind, n)
  sample_qubits = n * max(1, (f - 1).bit_length())
  return (
      depth.DepthReport(elementary_layers=1)
      + operations.sort_depth(network).repeated(2)
  ).with_ancillas(sample_qubits)

