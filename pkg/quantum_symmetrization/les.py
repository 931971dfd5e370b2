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

"""Lower exceeding sequences (LESs) and their bijection with permutations.

An LES of length n is a list s with 1 <= s_i <= i. The LES of a permutation
sigma is read off its permutation diagram, the n x n grid with block
(i, sigma(12...n)_i) filled: s_i counts the filled blocks in the rectangle
spanned by the origin and the filled block of column i.

Going back, `les_to_perm_naive` fills columns right to left, placing column j
in the s_j-th unused row. `les_to_perm_parallel` fills them divide and conquer:
it builds the diagrams of both halves of the columns and merges them by
inserting each row of the left diagram into the corresponding unfilled row of
the right one. Every merge is made of reversible pieces only (a REVSORT
between two comparison rules, prefix sums and their uncomputation, and local
additions), so the whole conversion can be lifted onto a quantum register.

Example Usage:
  >>> perm_to_les(permutations.Permutation((4, 3, 6, 1, 2, 5)))
  (1, 2, 1, 1, 5, 3)
  >>> les_to_perm_parallel((1, 2, 1, 1, 5, 3)).image
  (4, 3, 6, 1, 2, 5)
"""

from collections.abc import Iterator, Sequence
import dataclasses
import functools
import itertools
import math

from absl import logging
import numpy as np

from quantum_symmetrization import checks
from quantum_symmetrization import depth
from quantum_symmetrization import permutations
from quantum_symmetrization import prefix_scan
from quantum_symmetrization import state as state_lib
from quantum_symmetrization.sorting import networks
from quantum_symmetrization.sorting import operations
from quantum_symmetrization.sorting import rules


Les = tuple[int, ...]
# A filled block (row, column) of a permutation diagram.
Block = tuple[int, int]
TupleList = tuple[Block, ...]


def is_les(s: Sequence[int]) -> bool:
  return all(1 <= v <= i for i, v in enumerate(s, start=1))


def all_les(n: int) -> Iterator[Les]:
  """All n! LESs of length n, in lexicographic order."""
  return itertools.product(*(range(1, i + 1) for i in range(1, n + 1)))


def perm_to_les(sigma: permutations.Permutation) -> Les:
  """s_i = |{j <= i : pos(j) <= pos(i)}|, pos(j) the position of j."""
  position = sigma.inverse().image
  return tuple(
      sum(1 for j in range(1, i + 1) if position[j - 1] <= position[i - 1])
      for i in range(1, sigma.n + 1)
  )


def les_to_perm_naive(s: Sequence[int]) -> permutations.Permutation:
  """Fills column j in the s_j-th unused row, for j = n down to 1."""
  checks.check_les(s, 's')
  n = len(s)
  unused = list(range(1, n + 1))
  image = [0] * n
  for j in range(n, 0, -1):
    row = unused.pop(s[j - 1] - 1)
    image[row - 1] = j
  return permutations.Permutation(tuple(image))


@dataclasses.dataclass(frozen=True)
class RankArrays:
  """Ranks of the merged entries within their own side.

  Attributes:
    left: d_L; entry i's rank among left entries at positions <= i.
    right: d_R; the same count for right entries.
  """

  left: tuple[int, ...]
  right: tuple[int, ...]

  def __post_init__(self):
    if len(self.left) != len(self.right):
      raise ValueError('Rank arrays must have equal length.')
    for i, (a, b) in enumerate(zip(self.left, self.right), start=1):
      if a + b != i:
        raise checks.InvariantViolation(
            f'Ranks {a} + {b} at position {i} do not add up to {i}'
        )


def _input_rule(mid: int) -> rules.ComparisonRule:
  """Gamma_0 on (index, row, column): left side first, then by row."""

  def precedes(x, y):
    x_left, y_left = x[2] <= mid, y[2] <= mid
    if x_left != y_left:
      return x_left
    return x[1] < y[1]

  return rules.from_precedence(f'merge_input({mid})', 3, precedes)


def _output_rule(k: int) -> rules.ComparisonRule:
  """Gamma_1 on (index, row, column), k the number of left entries.

  Entries of one side keep their index order. A left entry precedes the right
  entry of rank q iff r_left + q <= r_right, i.e. iff its final row lies below
  that right row.
  """

  def precedes(x, y):
    x_left, y_left = x[0] <= k, y[0] <= k
    if x_left == y_left:
      return x[0] < y[0]
    if x_left:
      return x[1] + (y[0] - k) <= y[1]
    return y[1] + (x[0] - k) > x[1]

  return rules.from_precedence(f'merge_output({k})', 3, precedes)


def merge_diagrams(
    left: Sequence[Block],
    right: Sequence[Block],
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> TupleList:
  """Merges the row-sorted block lists of two adjacent column ranges.

  The left diagram covers the columns up to `mid`, the largest of its
  columns, and the right diagram the columns after it. The left block in
  local row r moves to the r-th row not filled by the right diagram.

  Args:
    left: Blocks (row, column) of the left diagram, sorted by row.
    right: Blocks of the right diagram, sorted by row.
    kind: Network used by the reversible sort.

  Returns:
    The blocks of the merged diagram, sorted by row.

  Raises:
    ValueError: If an input is not sorted by row or the columns overlap.
    InvariantViolation: If a reversible step leaves inconsistent state.
  """
  left, right = tuple(map(tuple, left)), tuple(map(tuple, right))
  for name, side in (('left', left), ('right', right)):
    if any(a[0] >= b[0] for a, b in zip(side, side[1:])):
      raise ValueError(f'The {name} diagram is not sorted by row: {side}')
  if not left or not right:
    return left or right
  k = len(left)
  mid = max(c for _, c in left)
  if any(c <= mid for _, c in right):
    raise ValueError(f'Right columns must exceed {mid}, found {right}')

  # Step 1: reversibly re-sort the index-extended list.
  tagged = tuple((i, r, c) for i, (r, c) in enumerate(left + right, start=1))
  network = networks.build_network(kind, len(tagged))
  merged = operations.revsort_values(
      tagged, _input_rule(mid), _output_rule(k), network
  )
  for side in (lambda t: t[2] <= mid, lambda t: t[2] > mid):
    indices = [t[0] for t in merged if side(t)]
    if indices != sorted(indices):
      raise checks.InvariantViolation(
          f'Merge did not preserve the order within a side: {merged}'
      )

  is_left = [int(c <= mid) for _, _, c in merged]
  is_right = [1 - v for v in is_left]
  ranks = RankArrays(
      prefix_scan.prefix_sums(is_left), prefix_scan.prefix_sums(is_right)
  )
  for (index, _, c), d_left, d_right in zip(merged, ranks.left, ranks.right):
    expected = d_left if c <= mid else d_right + k
    if index != expected:
      raise checks.InvariantViolation(
          f'Index {index} of {(index, c)} does not match its rank {expected}'
      )

  # Step 2: left blocks move up past the right rows below them.
  final = tuple(
      (r + d_right, c) if c <= mid else (r, c)
      for (_, r, c), d_right in zip(merged, ranks.right)
  )
  if prefix_scan.unprefix_sums(ranks.left) != tuple(is_left) or (
      prefix_scan.unprefix_sums(ranks.right) != tuple(is_right)
  ):
    raise checks.InvariantViolation('Rank arrays did not uncompute cleanly.')
  if any(a[0] >= b[0] for a, b in zip(final, final[1:])):
    raise checks.InvariantViolation(f'Merged rows are not increasing: {final}')
  return final


@functools.lru_cache(maxsize=65536)
def _les_to_image(s: Les, kind: networks.NetworkKind) -> tuple[int, ...]:
  n = len(s)
  size = checks.next_power_of_two(n)
  padded = s + tuple(range(n + 1, size + 1))
  diagrams = [((v, j),) for j, v in enumerate(padded, start=1)]
  while len(diagrams) > 1:
    diagrams = [
        merge_diagrams(diagrams[i], diagrams[i + 1], kind)
        for i in range(0, len(diagrams), 2)
    ]
  blocks = diagrams[0]
  if [r for r, _ in blocks] != list(range(1, size + 1)):
    raise checks.InvariantViolation(f'Diagram rows are incomplete: {blocks}')
  return tuple(c for _, c in blocks[:n])


def les_to_perm_parallel(
    s: Sequence[int],
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> permutations.Permutation:
  """Divide-and-conquer LES to permutation conversion.

  Lengths that are not a power of two are padded with s_i = i, which fills
  the diagonal of the extra columns, and the padding is stripped afterwards.

  Args:
    s: An LES.
    kind: Network used by the reversible sorts inside every merge.

  Returns:
    The permutation whose LES is `s`.
  """
  checks.check_les(s, 's')
  if not s:
    return permutations.Permutation(())
  return permutations.Permutation(_les_to_image(tuple(s), kind))


def les_family(values: Sequence[int]) -> Iterator[Les]:
  """LES_l: s with min{j : l_j = l_i} <= s_i <= i, for an NSIL l.

  Its images under the LES bijection are exactly H_l, the stabilizer of l.

  Args:
    values: An NSIL l.

  Returns:
    An iterator over the prod_v n_v! members, in lexicographic order.
  """
  starts = []
  for block in permutations.coset_structure(values):
    starts.extend([block.start] * block.length)
  return iter(product_les(starts))


def product_les(starts: Sequence[int]) -> tuple[Les, ...]:
  """All s with starts[i-1] <= s_i <= i, in lexicographic order."""
  return tuple(
      itertools.product(
          *(range(a, i + 1) for i, a in enumerate(starts, start=1))
      )
  )


def les_family_size(values: Sequence[int]) -> int:
  return permutations.subgroup_order(values)


def uniform_les_branch(
    index: int, n: int
) -> state_lib.BranchMap:
  """Prepares the uniform superposition of all LESs in register `index`.

  The preparation is a product of single-element uniform superpositions
  over 1..i, so it has constant depth.

  Args:
    index: Position of the (zeroed) register in the layout.
    n: Length of the LESs.

  Returns:
    A branch map for `SparseState.superpose`.
  """
  amplitude = 1 / math.sqrt(math.factorial(n))
  members = tuple(all_les(n))

  def branch(config):
    checks.check_zeroed(config[index], 'LES')
    return [
        (state_lib.with_register(config, index, s), amplitude)
        for s in members
    ]

  return branch


def les_to_perm_op(
    state: state_lib.SparseState,
    register: str,
    kind: networks.NetworkKind = networks.NetworkKind.BITONIC,
) -> state_lib.SparseState:
  """Lifts `les_to_perm_parallel` onto register `register`."""
  i = state.layout.index(register)
  logging.debug('LES -> permutation on %d terms', len(state))
  return state.lift(
      lambda config: state_lib.with_register(
          config, i, les_to_perm_parallel(config[i], kind).image
      ),
      name='LES->perm',
  )


def perm_to_les_op(
    state: state_lib.SparseState, register: str
) -> state_lib.SparseState:
  """Lifts `perm_to_les` onto register `register`."""
  i = state.layout.index(register)
  return state.lift(
      lambda config: state_lib.with_register(
          config, i, perm_to_les(permutations.Permutation(config[i]))
      ),
      name='perm->LES',
  )


def les_to_perm_depth(
    n: int, kind: networks.NetworkKind = networks.NetworkKind.BITONIC
) -> depth.DepthReport:
  """Cost of `les_to_perm_parallel`; merges of one level run in parallel.

  Each level pays one REVSORT over the merged width, a scan to compute the
  rank arrays and one to uncompute them, and two layers of local updates
  (index removal and the row shift).

  Args:
    n: Length of the LES.
    kind: Network used by the reversible sorts.

  Returns:
    The depth report, O(log^3 n) comparator and elementary layers.
  """
  size = checks.next_power_of_two(n)
  report = depth.DepthReport()
  width = 2
  while width <= size:
    network = networks.build_network(kind, width)
    scan = prefix_scan.prefix_sums_depth(width)
    level = (
        operations.revsort_depth(network)
        + scan
        + scan
        + depth.DepthReport(elementary_layers=2)
    )
    report += dataclasses.replace(
        level, ancilla_qubits=size // width * level.ancilla_qubits
    )
    width *= 2
  element_qubits = 3 * max(1, size.bit_length())
  return report.with_ancillas(size * element_qubits)


def random_les(n: int, rng: state_lib.RngType = None) -> Les:
  """A uniformly random LES of length n."""
  rng = np.random.default_rng(rng)
  return tuple(int(rng.integers(1, i + 1)) for i in range(1, n + 1))
