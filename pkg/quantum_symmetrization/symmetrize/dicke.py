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

"""Dicke states by symmetrizing 0^(n-k) 1^k."""

from collections.abc import Mapping
import itertools
import math

from scipy import special

from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.symmetrize import nsil
from quantum_symmetrization.symmetrize import registers


def _check_weight(n: int, k: int):
  if n < 1:
    raise ValueError(f'n must be positive, found {n}')
  if not 0 <= k <= n:
    raise ValueError(f'k must be in [0, {n}], found {k}')


def hamming_list(n: int, k: int) -> tuple[int, ...]:
  _check_weight(n, k)
  return (0,) * (n - k) + (1,) * k


def dicke(
    n: int, k: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> state_lib.SparseState:
  """D_n^k over the data register, bound 1."""
  out = nsil.nsil_symmetrize_single(hamming_list(n, k), bound=1, kind=kind)
  return nsil.discard_ancillas(out)


def dicke_superposition(
    n: int,
    weights: Mapping[int, complex],
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """Sum_k w_k D_n^k for normalized weights.

  Args:
    n: Number of qubits.
    weights: Amplitude of each Hamming weight k; the squared magnitudes must
      sum to one.
    kind: The sorting network.

  Returns:
    The superposition of Dicke states over the data register.

  Raises:
    ValueError: If a weight is out of range or the weights are not
      normalized.
  """
  norm = math.fsum(abs(w) ** 2 for w in weights.values())
  if abs(norm - 1.0) > state_lib.NORM_ATOL:
    raise ValueError(f'Weights must have unit norm, found {norm}')
  state = state_lib.SparseState.single_register(
      registers.DATA, {hamming_list(n, k): w for k, w in weights.items()}, 1
  )
  return nsil.nsil_symmetrize_superposed(state, kind=kind)


def dicke_oracle(n: int, k: int) -> state_lib.SparseState:
  """D_n^k written down directly."""
  _check_weight(n, k)
  amplitude = 1 / math.sqrt(special.comb(n, k, exact=True))
  terms = {}
  for ones in itertools.combinations(range(n), k):
    bits = [0] * n
    for i in ones:
      bits[i] = 1
    terms[tuple(bits)] = amplitude
  return state_lib.SparseState.single_register(registers.DATA, terms, 1)
