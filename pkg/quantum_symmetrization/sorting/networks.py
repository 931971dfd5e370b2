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

"""Comparator networks.

A network of width n is a sequence of layers; each layer holds disjoint
comparators (i, j) with 0 <= i < j < n. Every comparator leaves the smaller
element at position i. Comparators are numbered in network order (layer by
layer), which is also the order of the bits of a record.

Example Usage:
  >>> build_bubble(3).comparators
  ((0, 1), (1, 2), (0, 1))
  >>> network = build_bitonic(8)
  >>> network.depth, network.size
  (6, 24)
"""

from collections.abc import Sequence
import dataclasses
import enum
import functools
import itertools

import numpy as np
import pydantic


Comparator = tuple[int, int]
Layer = tuple[Comparator, ...]

_NETWORK_ADAPTER = pydantic.TypeAdapter(list[list[tuple[int, int]]])


@dataclasses.dataclass(frozen=True)
class SortingNetwork:
  """A comparator network.

  Attributes:
    n: Number of wires.
    layers: Layers of disjoint comparators.
  """

  n: int
  layers: tuple[Layer, ...]

  def __post_init__(self):
    object.__setattr__(
        self,
        'layers',
        tuple(
            tuple((int(i), int(j)) for i, j in layer) for layer in self.layers
        ),
    )
    if self.n < 0:
      raise ValueError(f'Network width must be non-negative, found {self.n}')
    for layer in self.layers:
      if not layer:
        raise ValueError('Network layers must be non-empty.')
      wires = [w for comparator in layer for w in comparator]
      if len(set(wires)) != len(wires):
        raise ValueError(f'Comparators of a layer must be disjoint: {layer}')
      for i, j in layer:
        if not 0 <= i < j < self.n:
          raise ValueError(
              f'Comparator {(i, j)} needs 0 <= i < j < {self.n}'
          )

  @functools.cached_property
  def comparators(self) -> tuple[Comparator, ...]:
    return tuple(itertools.chain.from_iterable(self.layers))

  @property
  def size(self) -> int:
    """Number of comparators, i.e. the length of a record."""
    return len(self.comparators)

  @property
  def depth(self) -> int:
    return len(self.layers)

  def apply(self, values: Sequence) -> tuple:
    """Classically sorts `values` with the natural order of its elements."""
    values = list(values)
    for i, j in self.comparators:
      if values[i] > values[j]:
        values[i], values[j] = values[j], values[i]
    return tuple(values)

  def sorts_all_binary(self) -> bool:
    """Checks the 0-1 principle over all 2^n binary inputs."""
    for bits in itertools.product((0, 1), repeat=self.n):
      out = self.apply(bits)
      if any(a > b for a, b in zip(out, out[1:])):
        return False
    return True

  def shuffled_within_layers(
      self, rng: np.random.Generator | int | None = None
  ) -> 'SortingNetwork':
    """An equivalent network with each layer's comparators reordered."""
    rng = np.random.default_rng(rng)
    layers = []
    for layer in self.layers:
      order = rng.permutation(len(layer))
      layers.append(tuple(layer[k] for k in order))
    return SortingNetwork(self.n, tuple(layers))

  def to_json(self) -> str:
    layers = [[tuple(c) for c in layer] for layer in self.layers]
    return _NETWORK_ADAPTER.dump_json(layers).decode()

  @classmethod
  def from_json(cls, n: int, text: str | bytes) -> 'SortingNetwork':
    layers = _NETWORK_ADAPTER.validate_json(text)
    return cls(n, tuple(tuple(layer) for layer in layers))


def build_bubble(n: int) -> SortingNetwork:
  """Bubble sort: passes of adjacent comparators, one comparator per layer."""
  if n < 1:
    raise ValueError(f'Network width must be positive, found {n}')
  layers = [
      ((i, i + 1),) for end in range(n - 1, 0, -1) for i in range(end)
  ]
  return SortingNetwork(n, tuple(layers))


def _bitonic_layers(size: int) -> list[list[Comparator]]:
  """All-ascending bitonic sorter on a power-of-two number of wires."""
  layers = []
  block = 2
  while block <= size:
    layers.append([
        (start + i, start + block - 1 - i)
        for start in range(0, size, block)
        for i in range(block // 2)
    ])
    half = block // 4
    while half >= 1:
      layers.append([
          (start + i, start + i + half)
          for start in range(0, size, 2 * half)
          for i in range(half)
      ])
      half //= 2
    block *= 2
  return layers


def build_bitonic(n: int) -> SortingNetwork:
  """Bitonic sorter on n wires.

  Widths that are not a power of two are padded with +inf sentinels at the
  end. Comparators touching a sentinel never swap, so they are removed, along
  with any layer left empty.

  Args:
    n: Number of wires, at least 1.

  Returns:
    The network. For n = 2^k it has k(k+1)/2 layers of n/2 comparators.
  """
  if n < 1:
    raise ValueError(f'Network width must be positive, found {n}')
  padded = 1 << (n - 1).bit_length()
  layers = []
  for layer in _bitonic_layers(padded):
    kept = tuple((i, j) for i, j in layer if j < n)
    if kept:
      layers.append(kept)
  return SortingNetwork(n, tuple(layers))


class NetworkKind(enum.Enum):
  """Which comparator network to build."""

  BITONIC = 'bitonic'
  BUBBLE = 'bubble'

  def build(self, n: int) -> SortingNetwork:
    return build_network(self, n)


@functools.lru_cache(maxsize=None)
def build_network(kind: NetworkKind, n: int) -> SortingNetwork:
  match kind:
    case NetworkKind.BITONIC:
      return build_bitonic(n)
    case NetworkKind.BUBBLE:
      return build_bubble(n)

  raise ValueError(f'Unknown network kind {kind}')
