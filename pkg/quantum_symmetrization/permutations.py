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

"""Permutations, increasing lists and the coset structure S_n = R_l H_l.

Permutations are 1-indexed and stored by their image on 12...n: a permutation
`sigma` with `sigma.image == (4, 3, 6, 1, 2, 5)` maps 123456 to 436125. Acting
on a list, `apply(sigma, l)[i] == l[sigma.image[i] - 1]`.

For a non-strictly increasing list (NSIL) `l`, the stabilizer
H_l = {h : apply(h, l) == l} permutes positions within each run of equal
values. The representatives R_l are the stable permutations, which keep the
relative order of equal elements; every permutation factors uniquely as
`compose(r, h)` with r in R_l and h in H_l.
"""

import collections
from collections.abc import Iterator, Sequence
import dataclasses
import itertools
import math

from quantum_symmetrization import checks


@dataclasses.dataclass(frozen=True)
class Permutation:
  """A bijection on positions 1..n, stored as its image of 12...n."""

  image: tuple[int, ...]

  def __post_init__(self):
    object.__setattr__(self, 'image', tuple(int(v) for v in self.image))
    checks.check_permutation_image(self.image)

  @classmethod
  def identity(cls, n: int) -> 'Permutation':
    return cls(tuple(range(1, n + 1)))

  @classmethod
  def all(cls, n: int) -> Iterator['Permutation']:
    """All n! permutations, in lexicographic order of their images."""
    for image in itertools.permutations(range(1, n + 1)):
      yield cls(image)

  @property
  def n(self) -> int:
    return len(self.image)

  def __len__(self) -> int:
    return len(self.image)

  def __call__(self, values: Sequence[int]) -> tuple[int, ...]:
    return apply(self, values)

  def inverse(self) -> 'Permutation':
    image = [0] * self.n
    for i, v in enumerate(self.image, start=1):
      image[v - 1] = i
    return Permutation(tuple(image))

  def is_identity(self) -> bool:
    return self.image == tuple(range(1, self.n + 1))


def apply(sigma: Permutation, values: Sequence) -> tuple:
  """Rearranges `values` by `sigma`; apply(sigma, 12...n) == sigma.image."""
  if len(sigma) != len(values):
    raise ValueError(
        f'Permutation of size {len(sigma)} cannot act on {tuple(values)}'
    )
  return tuple(values[i - 1] for i in sigma.image)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
  """The permutation sigma o tau, with apply(sigma o tau, l) = sigma(tau(l))."""
  if len(sigma) != len(tau):
    raise ValueError(f'Size mismatch: {len(sigma)} vs {len(tau)}')
  return Permutation(tuple(tau.image[i - 1] for i in sigma.image))


def is_nsil(values: Sequence[int]) -> bool:
  return all(a <= b for a, b in zip(values, values[1:]))


def is_sil(values: Sequence[int]) -> bool:
  return all(a < b for a, b in zip(values, values[1:]))


@dataclasses.dataclass(frozen=True)
class Block:
  """A maximal run of equal values; `start` is 1-indexed."""

  start: int
  length: int
  value: int

  @property
  def positions(self) -> range:
    return range(self.start, self.start + self.length)


def coset_structure(values: Sequence[int]) -> tuple[Block, ...]:
  """The maximal runs of equal values of an NSIL."""
  checks.check_nsil(values, 'l')
  blocks = []
  start = 1
  for value, run in itertools.groupby(values):
    length = len(list(run))
    blocks.append(Block(start, length, value))
    start += length
  return tuple(blocks)


def subgroup_order(values: Sequence[int]) -> int:
  """|H_l|, the product of the factorials of the value multiplicities."""
  return math.prod(math.factorial(b.length) for b in coset_structure(values))


def enumerate_h(values: Sequence[int]) -> list[Permutation]:
  """All h with apply(h, l) == l, sorted by image."""
  blocks = coset_structure(values)
  per_block = [itertools.permutations(b.positions) for b in blocks]
  return sorted(
      (
          Permutation(tuple(itertools.chain.from_iterable(choice)))
          for choice in itertools.product(*per_block)
      ),
      key=lambda h: h.image,
  )


def multiset_permutations(values: Sequence[int]) -> list[tuple[int, ...]]:
  """All distinct rearrangements of `values`, in sorted order."""
  counts = collections.Counter(values)
  keys = sorted(counts)
  n = len(values)
  result = []
  prefix = []

  def extend():
    if len(prefix) == n:
      result.append(tuple(prefix))
      return
    for key in keys:
      if counts[key]:
        counts[key] -= 1
        prefix.append(key)
        extend()
        prefix.pop()
        counts[key] += 1

  extend()
  return result


def multinomial(values: Sequence[int]) -> int:
  """Number of distinct rearrangements of `values`."""
  counts = collections.Counter(values).values()
  return math.factorial(len(values)) // math.prod(
      math.factorial(c) for c in counts
  )


def stable_representative(
    values: Sequence[int], arrangement: Sequence[int]
) -> Permutation:
  """The permutation in R_l that rearranges `values` into `arrangement`.

  Equal elements keep their relative order.

  Args:
    values: An NSIL l.
    arrangement: A rearrangement of l.

  Returns:
    The stable permutation r with apply(r, l) == arrangement.

  Raises:
    ValueError: If `arrangement` is not a rearrangement of `values`.
  """
  if sorted(arrangement) != sorted(values):
    raise ValueError(
        f'{tuple(arrangement)} is not a rearrangement of {tuple(values)}'
    )
  unused = collections.defaultdict(collections.deque)
  for position, value in enumerate(values, start=1):
    unused[value].append(position)
  return Permutation(tuple(unused[v].popleft() for v in arrangement))


def canonical_coset_reps(values: Sequence[int]) -> list[Permutation]:
  """R_l: one stable representative per distinct rearrangement of l."""
  checks.check_nsil(values, 'l')
  return [
      stable_representative(values, arrangement)
      for arrangement in multiset_permutations(values)
  ]


def factorize(
    sigma: Permutation, values: Sequence[int]
) -> tuple[Permutation, Permutation]:
  """Splits sigma as compose(r, h) with r in R_l and h in H_l.

  Args:
    sigma: Any permutation of the size of l.
    values: An NSIL l.

  Returns:
    The pair (r, h).
  """
  checks.check_nsil(values, 'l')
  r = stable_representative(values, apply(sigma, values))
  h = [0] * len(sigma)
  for i, v in zip(r.image, sigma.image):
    h[i - 1] = v
  h = Permutation(tuple(h))
  if apply(h, values) != tuple(values):
    raise checks.InvariantViolation(
        f'Factor {h.image} of {sigma.image} does not stabilize {tuple(values)}'
    )
  return r, h
