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

"""Comparison rules: total orders on integer tuples.

A rule compares two tuples of a fixed arity and returns +1 when the first
precedes the second, -1 when it follows, and 0 when they are equal. Plain
integers are treated as 1-tuples. A list is Gamma-sorted when every adjacent
pair compares +1, i.e. it is strictly increasing under the rule.

Example Usage:
  >>> PARITY.compare(2, 7)
  -1
  >>> sorted_under(PARITY, (1, 2, 3, 4, 5, 7, 8))
  (1, 3, 5, 7, 2, 4, 8)
"""

from collections.abc import Callable, Sequence
import dataclasses
import functools
from typing import Any, TypeAlias

from quantum_symmetrization import checks


Element: TypeAlias = int | tuple[int, ...]
CompareFn: TypeAlias = Callable[[tuple[int, ...], tuple[int, ...]], int]


def as_tuple(x: Element) -> tuple[int, ...]:
  return (x,) if isinstance(x, int) else tuple(x)


@dataclasses.dataclass(frozen=True)
class ComparisonRule:
  """A named total order on tuples of a fixed arity.

  The sign convention is the reverse of a Python `cmp` function: `compare`
  returns +1 when x precedes y, so `compare(1, 2) == 1` under `ASCENDING`.
  Use `key` to pass a rule to `sorted`.

  Attributes:
    name: Human readable name.
    arity: Width of the compared tuples.
    fn: Returns +1 if x precedes y, -1 if y precedes x, 0 if equal.
  """

  name: str
  arity: int
  fn: CompareFn = dataclasses.field(compare=False)

  def compare(self, x: Element, y: Element) -> int:
    x, y = as_tuple(x), as_tuple(y)
    if len(x) != self.arity or len(y) != self.arity:
      raise ValueError(
          f'Rule {self.name} compares {self.arity}-tuples, found {x} and {y}'
      )
    return self.fn(x, y)

  def precedes(self, x: Element, y: Element) -> bool:
    return self.compare(x, y) == 1

  def is_sorted(self, values: Sequence[Element]) -> bool:
    """Whether `values` is strictly increasing under this rule."""
    return all(self.compare(a, b) == 1 for a, b in zip(values, values[1:]))

  def key(self) -> Callable[[Element], Any]:
    """A sort key realizing this rule (ascending order)."""
    return functools.cmp_to_key(lambda x, y: -self.compare(x, y))


def sorted_under(rule: ComparisonRule, values: Sequence[Element]) -> tuple:
  """Oracle sort of `values` under `rule`."""
  return tuple(sorted(values, key=rule.key()))


def by_key(
    name: str, arity: int, key: Callable[[tuple[int, ...]], Any]
) -> ComparisonRule:
  """The rule ordering tuples by an injective sort key."""

  def fn(x, y):
    kx, ky = key(x), key(y)
    if kx < ky:
      return 1
    if kx > ky:
      return -1
    return 0

  return ComparisonRule(name, arity, fn)


def lexicographic(arity: int) -> ComparisonRule:
  return by_key(f'lexicographic{arity}', arity, lambda x: x)


ASCENDING = by_key('ascending', 1, lambda x: x)
PARITY = by_key('parity', 1, lambda x: (x[0] % 2 == 0, x[0]))


def stabilized(rule: ComparisonRule) -> ComparisonRule:
  """Extends `rule` to (element..., index) tuples, breaking ties by index."""

  def fn(x, y):
    result = rule.fn(x[:-1], y[:-1])
    if result:
      return result
    return (x[-1] < y[-1]) - (x[-1] > y[-1])

  return ComparisonRule(f'stabilized({rule.name})', rule.arity + 1, fn)


def from_precedence(
    name: str,
    arity: int,
    precedes: Callable[[tuple[int, ...], tuple[int, ...]], bool],
) -> ComparisonRule:
  """A rule given by a strict precedence relation, checked for totality.

  Every pair of distinct tuples must satisfy exactly one of precedes(x, y)
  and precedes(y, x).

  Args:
    name: Human readable name.
    arity: Width of the compared tuples.
    precedes: The strict order.

  Returns:
    The rule. Comparing a pair that violates totality raises
    `InvariantViolation`.
  """

  def fn(x, y):
    if x == y:
      return 0
    forward, backward = precedes(x, y), precedes(y, x)
    if forward == backward:
      raise checks.InvariantViolation(
          f'Rule {name} is not total on {x} and {y}: precedes both ways is'
          f' {forward}'
      )
    return 1 if forward else -1

  return ComparisonRule(name, arity, fn)
