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

"""Utilities for confirming register contents have the expected structure.

Two kinds of failures are distinguished. Malformed caller input raises
`ValueError`. A broken internal invariant, e.g. an ancilla register that
should have been returned to zero or a reversible map that collided two basis
states, raises `InvariantViolation`.
"""

from collections.abc import Iterable, Sequence


class InvariantViolation(RuntimeError):
  """An internal invariant of a reversible computation did not hold."""


def _pad(s: str):
  return s + ' ' if s else ''


def is_power_of_two(n: int) -> bool:
  return n >= 1 and (n & (n - 1)) == 0


def next_power_of_two(n: int) -> int:
  """Smallest power of two that is >= max(n, 1)."""
  return 1 << max(n - 1, 0).bit_length()


def check_power_of_two(n: int, name: str = ''):
  if not is_power_of_two(n):
    raise ValueError(f'Length {_pad(name)}should be a power of two, found {n}')


def check_non_negative_ints(values: Iterable[int], name: str = ''):
  values = tuple(values)
  for v in values:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
      raise ValueError(
          f'List {_pad(name)}should hold non-negative integers, found {values}'
      )


def check_nsil(values: Sequence[int], name: str = ''):
  """Checks for a non-strictly increasing list of non-negative integers."""
  check_non_negative_ints(values, name)
  if any(a > b for a, b in zip(values, values[1:])):
    raise ValueError(
        f'List {_pad(name)}should be non-strictly increasing, found'
        f' {tuple(values)}'
    )


def check_sil(values: Sequence[int], name: str = ''):
  """Checks for a strictly increasing list of non-negative integers."""
  check_non_negative_ints(values, name)
  if any(a >= b for a, b in zip(values, values[1:])):
    raise ValueError(
        f'List {_pad(name)}should be strictly increasing, found'
        f' {tuple(values)}'
    )


def check_permutation_image(image: Sequence[int], name: str = ''):
  if sorted(image) != list(range(1, len(image) + 1)):
    raise ValueError(
        f'Permutation {_pad(name)}should be a bijection on 1..{len(image)},'
        f' found image {tuple(image)}'
    )


def check_les(s: Sequence[int], name: str = ''):
  """Checks for a Lehmer-like sequence: 1 <= s_i <= i for every i."""
  for i, v in enumerate(s, start=1):
    if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= i:
      raise ValueError(
          f'LES {_pad(name)}should satisfy 1 <= s_i <= i, found {tuple(s)}'
      )


def check_zeroed(values: Sequence[int], name: str = ''):
  """Raises `InvariantViolation` if an ancilla register is not clean."""
  if any(values):
    raise InvariantViolation(
        f'Ancilla register {_pad(name)}should be zero, found {tuple(values)}'
    )


def check_probability(p: float, name: str = '', atol: float = 1e-9):
  if not -atol <= p <= 1 + atol:
    raise InvariantViolation(
        f'Probability {_pad(name)}should lie in [0, 1], found {p}'
    )
