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

"""Duplicate detection in a non-strictly increasing list.

dup(l)_i is the length of the maximal run of equal values starting at
position i when that run has length > 1, and 0 otherwise; e.g.
dup(13333338) = 06000000.

`detect_duplicates` finds the runs with a tree of blocks. A block over the
range [h, t] reports n_h and n_t, the lengths of its head and tail runs. When
two sibling blocks merge, a run that crosses their boundary is extended, and
a run that can no longer grow is written to dup. The list is padded with at
least one sentinel larger than every value, so every real run is closed off
on the right; the run touching the head of the list is written at the end.
"""

from collections.abc import Sequence
import itertools

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import state as state_lib


DupVector = tuple[int, ...]


def naive_duplicates(values: Sequence[int]) -> DupVector:
  """Linear-scan oracle for `detect_duplicates`."""
  checks.check_nsil(values, 'l')
  dup = []
  for _, run in itertools.groupby(values):
    length = len(list(run))
    dup.extend([length if length > 1 else 0] + [0] * (length - 1))
  return tuple(dup)


def _merge(
    values: Sequence[int],
    dup: list[int],
    h: int,
    t: int,
    left: tuple[int, int],
    right: tuple[int, int],
) -> tuple[int, int]:
  """The block B_{h,t} (1-indexed, inclusive) merging two sibling blocks."""
  l = lambda i: values[i - 1]  # pylint: disable=unnecessary-lambda-assignment
  half = (t - h + 1) // 2
  h1, t1, h2, t2 = h, h + half - 1, h + half, t
  (nh1, nt1), (nh2, nt2) = left, right
  if l(t1) == l(h2):
    head_joined, tail_joined = l(t1) == l(h1), l(h2) == l(t2)
    if not head_joined and not tail_joined:
      dup[t1 - nt1] = nt1 + nh2
      return nh1, nt2
    if not head_joined:
      return nh1, nt2 + nt1
    if not tail_joined:
      return nh1 + nh2, nt2
    return nh1 + nh2, nh1 + nh2
  if 1 < nt1 < half:
    dup[t1 - nt1] = nt1
  if 1 < nh2 < half:
    dup[h2 - 1] = nh2
  return nh1, nt2


def detect_duplicates(values: Sequence[int]) -> DupVector:
  """dup(l) for an NSIL l, by log(n) layers of merging blocks.

  Args:
    values: A non-strictly increasing list of non-negative integers.

  Returns:
    The duplicate vector, of the same length as `values`.
  """
  checks.check_nsil(values, 'l')
  n = len(values)
  if not n:
    return ()
  size = checks.next_power_of_two(n + 1)
  padded = tuple(values) + (max(values) + 1,) * (size - n)
  dup = [0] * size
  blocks = [(1, 1)] * size
  width = 2
  while width <= size:
    blocks = [
        _merge(padded, dup, h, h + width - 1, blocks[b], blocks[b + 1])
        for b, h in zip(range(0, len(blocks), 2), range(1, size + 1, width))
    ]
    width *= 2
  head, _ = blocks[0]
  if head > 1:
    dup[0] = head
  return tuple(dup[:n])


def detect_duplicates_op(
    state: state_lib.SparseState, data: str, target: str
) -> state_lib.SparseState:
  """XORs dup(data) into register `target`; applying it twice is identity."""
  i, j = state.layout.index(data), state.layout.index(target)

  def step(config):
    dup = detect_duplicates(config[i])
    return state_lib.with_register(
        config, j, tuple(a ^ b for a, b in zip(config[j], dup))
    )

  return state.lift(step, name='duplicates')


def block_starts(dup: Sequence[int]) -> tuple[int, ...]:
  """For every position i (1-indexed), the first position of its run."""
  starts = []
  run_start, run_end = 0, 0
  for i, length in enumerate(dup, start=1):
    if length:
      run_start, run_end = i, i + length - 1
    starts.append(run_start if i <= run_end else i)
  return tuple(starts)


def detect_duplicates_depth(n: int) -> depth.DepthReport:
  """One layer of blocks per level; a block is a compare and an add."""
  size = checks.next_power_of_two(n + 1)
  levels = size.bit_length() - 1
  counter_qubits = 2 * max(1, size.bit_length())
  return depth.DepthReport(
      elementary_layers=2 * levels, ancilla_qubits=size * counter_qubits
  )
