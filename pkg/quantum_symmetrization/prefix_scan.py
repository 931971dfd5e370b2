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

"""Reversible parallel prefix sums.

The subroutine D(h, t) adds the entry at the midpoint of the block [h, t] to
every entry of the block's upper half. Running D on all blocks of size 2, then
4, and so on up to n turns an array into its inclusive prefix sums in log(n)
rounds. Each D step only adds register values, so running the rounds in
reverse with subtraction uncomputes the sums exactly.

Positions h and t are 1-indexed, as in the block notation above.

Example Usage:
  >>> prefix_sums((1, 1, 1, 1))
  (1, 2, 3, 4)
  >>> unprefix_sums((1, 2, 3, 4))
  (1, 1, 1, 1)
"""

from collections.abc import Sequence
import dataclasses
import math

import numpy as np

from quantum_symmetrization import checks
from quantum_symmetrization import depth


# Largest register width that fits the int64 simulation.
MAX_BITS = 62


def default_bits(n: int, max_entry: int) -> int:
  """Width w with no overflow when summing n entries up to max_entry."""
  return math.ceil(math.log2(n * max_entry + 1)) + 1


@dataclasses.dataclass(frozen=True)
class ScanArray:
  """Entries d_1..d_n held in w-bit registers, n a power of two.

  Attributes:
    values: The entries, a read-only int64 array.
    bits: Register width w; every entry lies in [0, 2^w).
  """

  values: np.ndarray
  bits: int

  def __post_init__(self):
    values = np.array(self.values, dtype=np.int64)
    values.setflags(write=False)
    object.__setattr__(self, 'values', values)
    if values.ndim != 1:
      raise ValueError(f'Scan arrays are one-dimensional, found {values.shape}')
    checks.check_power_of_two(len(values), 'of a scan array')
    if not 1 <= self.bits <= MAX_BITS:
      raise ValueError(f'bits must lie in [1, {MAX_BITS}], found {self.bits}')
    if np.any(values < 0) or np.any(values >= self.modulus):
      raise ValueError(
          f'Entries must lie in [0, 2^{self.bits}), found {values.tolist()}'
      )

  @classmethod
  def from_values(
      cls, values: Sequence[int], bits: int | None = None, fill: int = 0
  ) -> 'ScanArray':
    """Pads `values` with `fill` to a power-of-two length."""
    checks.check_non_negative_ints(values, 'of scan entries')
    n = checks.next_power_of_two(len(values))
    padded = np.full(n, fill, dtype=np.int64)
    padded[: len(values)] = values
    if bits is None:
      bits = default_bits(n, max(values, default=0))
    return cls(padded, bits)

  @property
  def modulus(self) -> int:
    return 1 << self.bits

  def __len__(self) -> int:
    return len(self.values)

  def tolist(self) -> list[int]:
    return self.values.tolist()


def d_step(
    arr: ScanArray, h: int, t: int, subtract: bool = False
) -> ScanArray:
  """The subroutine D(h, t), or its inverse when `subtract` is set.

  Args:
    arr: The array.
    h: First position of the block, 1-indexed.
    t: Last position of the block, 1-indexed.
    subtract: Whether to subtract instead of add.

  Returns:
    The array with d_mid added to (subtracted from) every d_i, mid < i <= t,
    where mid = floor((h + t) / 2).

  Raises:
    ValueError: If the block is malformed.
    OverflowError: If a result leaves [0, 2^w).
  """
  if not 1 <= h <= t <= len(arr):
    raise ValueError(f'Invalid block ({h}, {t}) for length {len(arr)}')
  checks.check_power_of_two(t - h + 1, 'of a D block')
  if h == t:
    return arr
  mid = (h + t) // 2
  values = arr.values.copy()
  delta = -values[mid - 1] if subtract else values[mid - 1]
  values[mid:t] += delta
  if np.any(values < 0) or np.any(values >= arr.modulus):
    raise OverflowError(
        f'D({h}, {t}) leaves the range [0, 2^{arr.bits}): {values.tolist()}'
    )
  return ScanArray(values, arr.bits)


def _rounds(n: int) -> list[list[tuple[int, int]]]:
  rounds = []
  size = 2
  while size <= n:
    rounds.append([(j * size + 1, (j + 1) * size) for j in range(n // size)])
    size *= 2
  return rounds


def prefix_scan(arr: ScanArray) -> ScanArray:
  """Inclusive prefix sums of a power-of-two array."""
  for blocks in _rounds(len(arr)):
    for h, t in blocks:
      arr = d_step(arr, h, t)
  return arr


def unprefix_scan(arr: ScanArray) -> ScanArray:
  """Inverse of `prefix_scan`."""
  for blocks in reversed(_rounds(len(arr))):
    for h, t in blocks:
      arr = d_step(arr, h, t, subtract=True)
  return arr


def prefix_sums(
    values: Sequence[int], bits: int | None = None
) -> tuple[int, ...]:
  """Inclusive prefix sums of `values`, computed reversibly.

  Args:
    values: Non-negative integers; zero-padded to a power of two internally.
    bits: Register width, by default `default_bits`.

  Returns:
    The prefix sums, of the same length as `values`.
  """
  arr = prefix_scan(ScanArray.from_values(values, bits))
  return tuple(arr.tolist()[: len(values)])


def unprefix_sums(
    values: Sequence[int], bits: int | None = None
) -> tuple[int, ...]:
  """Inverse of `prefix_sums`."""
  # Prefix sums of zero padding repeat the total.
  fill = values[-1] if len(values) else 0
  arr = unprefix_scan(ScanArray.from_values(values, bits, fill))
  return tuple(arr.tolist()[: len(values)])


def d_step_depth(size: int) -> int:
  """Layers of D on a block of `size` = 2^i: i - 1 copy layers and one add."""
  checks.check_power_of_two(size, 'of a D block')
  return size.bit_length() - 1


def prefix_sums_depth(n: int, bits: int | None = None) -> depth.DepthReport:
  """Cost of `prefix_sums` on n entries: L(L+1)/2 layers for n = 2^L."""
  padded = checks.next_power_of_two(n)
  layers = sum(d_step_depth(2**i) for i in range(1, padded.bit_length()))
  bits = bits or default_bits(padded, padded)
  # Fan-out copies of the midpoint entry.
  return depth.DepthReport(
      elementary_layers=layers, ancilla_qubits=padded // 2 * bits
  )
