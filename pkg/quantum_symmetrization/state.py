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

"""Sparse register-level quantum states.

A `SparseState` maps basis configurations to complex amplitudes. A basis
configuration holds the contents of every register of a `Layout`, and each
register is a fixed-length list of bounded non-negative integers. The
algorithms in this library act on whole integers (a comparator compares two
register elements), so a configuration is the natural label of a
computational-basis state. Classical reversible steps are quantized by lifting
them linearly over the terms of a state.

Terms whose amplitude falls below `PRUNE_THRESHOLD` are dropped; the total
probability mass dropped this way is carried along in `pruned_mass`.

Example Usage:
  >>> layout = Layout.of(('data', 2, 3))
  >>> state = SparseState.basis(layout, ((1, 2),))
  >>> swapped = state.lift(lambda config: (config[0][::-1],))
  >>> swapped.sorted_terms()
  [(((2, 1),), (1+0j))]
"""

import collections
from collections.abc import Callable, Iterable, Mapping, Sequence
import dataclasses
from typing import Any, TypeAlias

from absl import logging
import numpy as np
import pydantic

from quantum_symmetrization import checks


BasisConfig: TypeAlias = tuple[tuple[int, ...], ...]
Amplitude: TypeAlias = complex
ReversibleMap: TypeAlias = Callable[[BasisConfig], BasisConfig]
BranchMap: TypeAlias = Callable[
    [BasisConfig], Iterable[tuple[BasisConfig, complex]]
]
RngType = np.random.Generator | int | None

PRUNE_THRESHOLD = 1e-14
NORM_ATOL = 1e-9
# Pruned mass above this level is worth a warning.
_PRUNE_WARNING_MASS = 1e-12


def _pad(s: str):
  return s + ' ' if s else ''


def as_config(values: Iterable[Iterable[int]]) -> BasisConfig:
  return tuple(tuple(int(v) for v in register) for register in values)


def with_register(
    config: BasisConfig, index: int, values: Iterable[int]
) -> BasisConfig:
  """Returns `config` with the register at `index` replaced by `values`."""
  return config[:index] + (tuple(values),) + config[index + 1 :]


@dataclasses.dataclass(frozen=True)
class Register:
  """A named register of `arity` integers, each in [0, bound].

  Attributes:
    name: Register name, unique within a layout.
    arity: Number of integer elements.
    bound: Inclusive upper bound on every element.
  """

  name: str
  arity: int
  bound: int

  def __post_init__(self):
    if not self.name:
      raise ValueError('Register name must be non-empty.')
    if self.arity < 0:
      raise ValueError(f'Register {self.name} has negative arity {self.arity}')
    if self.bound < 0:
      raise ValueError(f'Register {self.name} has negative bound {self.bound}')

  @property
  def qubits(self) -> int:
    """Qubits needed to store the register in binary."""
    return self.arity * max(1, self.bound.bit_length())

  def check(self, values: Sequence[int]):
    if len(values) != self.arity or any(
        not 0 <= v <= self.bound for v in values
    ):
      raise ValueError(
          f'Register {self.name} expects {self.arity} values in'
          f' [0, {self.bound}], found {tuple(values)}'
      )


@dataclasses.dataclass(frozen=True)
class Layout:
  """An ordered collection of named registers."""

  registers: tuple[Register, ...] = ()

  def __post_init__(self):
    object.__setattr__(self, 'registers', tuple(self.registers))
    names = [r.name for r in self.registers]
    if len(set(names)) != len(names):
      raise ValueError(f'Register names must be unique, found {names}')

  @classmethod
  def of(cls, *registers: Register | tuple[str, int, int]) -> 'Layout':
    return cls(
        tuple(r if isinstance(r, Register) else Register(*r) for r in registers)
    )

  @property
  def names(self) -> tuple[str, ...]:
    return tuple(r.name for r in self.registers)

  def __len__(self) -> int:
    return len(self.registers)

  def __contains__(self, name: str) -> bool:
    return name in self.names

  def index(self, name: str) -> int:
    try:
      return self.names.index(name)
    except ValueError:
      raise ValueError(
          f'Unknown register {name!r}, layout has {self.names}'
      ) from None

  def __getitem__(self, name: str) -> Register:
    return self.registers[self.index(name)]

  def check(self, config: BasisConfig):
    if len(config) != len(self.registers):
      raise ValueError(
          f'Configuration {config} does not match layout {self.names}'
      )
    for register, values in zip(self.registers, config):
      register.check(values)

  def zeros(self) -> BasisConfig:
    return tuple((0,) * r.arity for r in self.registers)

  def qubits(self) -> int:
    return sum(r.qubits for r in self.registers)

  def concat(self, other: 'Layout') -> 'Layout':
    return Layout(self.registers + other.registers)

  def without(self, names: Iterable[str]) -> 'Layout':
    names = set(names)
    for name in names:
      self.index(name)
    return Layout(tuple(r for r in self.registers if r.name not in names))

  def replaced(self, name: str, register: Register) -> 'Layout':
    """Returns the layout with register `name` swapped for `register`."""
    i = self.index(name)
    return Layout(self.registers[:i] + (register,) + self.registers[i + 1 :])


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class RegisterModel:
  name: str
  arity: int = pydantic.Field(ge=0)
  bound: int = pydantic.Field(ge=0)


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class TermModel:
  basis: list[list[int]]
  re: float = pydantic.Field(allow_inf_nan=False)
  im: float = pydantic.Field(allow_inf_nan=False)


@pydantic.dataclasses.dataclass(frozen=True, kw_only=True)
class StateModel:
  """JSON model of a `SparseState`, terms in lexicographic order."""

  layout: list[RegisterModel]
  terms: list[TermModel]


_STATE_ADAPTER = pydantic.TypeAdapter(StateModel)


@dataclasses.dataclass(frozen=True, eq=False)
class SparseState:
  """A sparse superposition over the basis configurations of a layout.

  Instances are treated as immutable: every operation returns a new state.

  Attributes:
    layout: The registers every configuration is laid out over.
    terms: Map from basis configuration to amplitude.
    pruned_mass: Probability mass dropped below `PRUNE_THRESHOLD` so far.
  """

  layout: Layout
  terms: Mapping[BasisConfig, complex]
  pruned_mass: float = 0.0

  @classmethod
  def _build(
      cls,
      layout: Layout,
      accumulator: Mapping[BasisConfig, complex],
      pruned_mass: float = 0.0,
  ) -> 'SparseState':
    terms = {}
    for config, amplitude in accumulator.items():
      if abs(amplitude) < PRUNE_THRESHOLD:
        pruned_mass += abs(amplitude) ** 2
      else:
        terms[config] = complex(amplitude)
    if pruned_mass > _PRUNE_WARNING_MASS:
      logging.warning('Pruned amplitude mass has reached %.3e', pruned_mass)
    return cls(layout, terms, pruned_mass)

  @classmethod
  def from_terms(
      cls,
      layout: Layout,
      terms: Iterable[tuple[Iterable[Iterable[int]], complex]],
      normalize: bool = False,
  ) -> 'SparseState':
    """Builds a state from (configuration, amplitude) pairs.

    Repeated configurations are summed.

    Args:
      layout: The layout of the state.
      terms: Pairs of basis configuration and amplitude.
      normalize: Whether to rescale the result to unit norm.

    Returns:
      The state.

    Raises:
      ValueError: If a configuration does not fit the layout, an amplitude is
        not finite, or `normalize` is requested for the zero vector.
    """
    accumulator = collections.defaultdict(complex)
    for config, amplitude in terms:
      config = as_config(config)
      layout.check(config)
      amplitude = complex(amplitude)
      if not np.isfinite(amplitude):
        raise ValueError(f'Amplitude of {config} is not finite: {amplitude}')
      accumulator[config] += amplitude
    state = cls._build(layout, accumulator)
    return state.normalized() if normalize else state

  @classmethod
  def basis(
      cls,
      layout: Layout,
      config: Iterable[Iterable[int]],
      amplitude: complex = 1.0,
  ) -> 'SparseState':
    return cls.from_terms(layout, [(config, amplitude)])

  @classmethod
  def single_register(
      cls,
      name: str,
      amplitudes: Mapping[Sequence[int], complex],
      bound: int | None = None,
      normalize: bool = False,
  ) -> 'SparseState':
    """Builds a state over one register from a map list -> amplitude.

    Args:
      name: Name of the register.
      amplitudes: Amplitude of every list in the support.
      bound: Element bound of the register, by default the largest value.
      normalize: Whether to rescale the result to unit norm.

    Returns:
      The state.

    Raises:
      ValueError: If the support is empty or its lists differ in length.
    """
    if not amplitudes:
      raise ValueError('At least one list is required.')
    lengths = {len(values) for values in amplitudes}
    if len(lengths) != 1:
      raise ValueError(
          f'All lists must have the same length, found lengths {lengths}'
      )
    if bound is None:
      bound = max((max(v, default=0) for v in amplitudes), default=0)
    register = Register(name, lengths.pop(), bound)
    return cls.from_terms(
        Layout((register,)),
        [((values,), amplitude) for values, amplitude in amplitudes.items()],
        normalize=normalize,
    )

  def __len__(self) -> int:
    return len(self.terms)

  def amplitude(self, config: Iterable[Iterable[int]]) -> complex:
    return self.terms.get(as_config(config), 0j)

  def sorted_terms(self) -> list[tuple[BasisConfig, complex]]:
    """Terms in the deterministic (lexicographic) order."""
    return sorted(self.terms.items())

  def norm(self) -> float:
    return float(np.linalg.norm(np.fromiter(self.terms.values(), complex)))

  def is_normalized(self, atol: float = NORM_ATOL) -> bool:
    return abs(self.norm() - 1.0) <= atol

  def normalized(self) -> 'SparseState':
    norm = self.norm()
    if norm == 0:
      raise ValueError('Cannot normalize the zero state.')
    return self.scaled(1 / norm)

  def scaled(self, factor: complex) -> 'SparseState':
    return SparseState._build(
        self.layout,
        {c: a * factor for c, a in self.terms.items()},
        self.pruned_mass,
    )

  def added(self, other: 'SparseState') -> 'SparseState':
    """The (unnormalized) linear combination self + other."""
    self._check_same_layout(other)
    accumulator = collections.defaultdict(complex, self.terms)
    for config, amplitude in other.terms.items():
      accumulator[config] += amplitude
    return SparseState._build(
        self.layout, accumulator, self.pruned_mass + other.pruned_mass
    )

  def _check_same_layout(self, other: 'SparseState'):
    if self.layout != other.layout:
      raise ValueError(
          f'Layouts differ: {self.layout.names} vs {other.layout.names}'
      )

  def lift(
      self,
      f: ReversibleMap,
      layout: Layout | None = None,
      name: str = '',
  ) -> 'SparseState':
    """Applies a classical reversible map linearly over the terms.

    Args:
      f: A bijection on basis configurations.
      layout: The layout of the image, by default the current layout.
      name: Name of the map, used in error messages.

    Returns:
      The state with every term (b, a) replaced by (f(b), a).

    Raises:
      InvariantViolation: If two configurations map to the same image.
      ValueError: If an image does not fit the target layout.
    """
    target = layout or self.layout
    terms = {}
    sources = {}
    for config, amplitude in self.terms.items():
      image = as_config(f(config))
      target.check(image)
      if image in terms:
        raise checks.InvariantViolation(
            f'Map {_pad(name)}is not injective: {sources[image]} and {config}'
            f' both map to {image}'
        )
      terms[image] = amplitude
      sources[image] = config
    return SparseState(target, terms, self.pruned_mass)

  def superpose(
      self, branch: BranchMap, layout: Layout | None = None
  ) -> 'SparseState':
    """Extends a branching map linearly over the terms.

    Args:
      branch: Maps each configuration to weighted output configurations whose
        weights form a unit vector.
      layout: The layout of the outputs, by default the current layout.

    Returns:
      The linear extension of `branch` applied to this state.

    Raises:
      ValueError: If the weights of some branch do not have unit norm.
      InvariantViolation: If the map is not an isometry on this state.
    """
    target = layout or self.layout
    accumulator = collections.defaultdict(complex)
    for config, amplitude in self.terms.items():
      outputs = [(as_config(c), complex(w)) for c, w in branch(config)]
      weight = sum(abs(w) ** 2 for _, w in outputs)
      if abs(weight - 1.0) > NORM_ATOL:
        raise ValueError(
            f'Branch weights of {config} have squared norm {weight}, expected 1'
        )
      for image, w in outputs:
        target.check(image)
        accumulator[image] += amplitude * w
    result = SparseState._build(target, accumulator, self.pruned_mass)
    if abs(result.norm() - self.norm()) > NORM_ATOL:
      raise checks.InvariantViolation(
          f'Branch map changed the norm from {self.norm()} to {result.norm()}'
      )
    return result

  def unsuperpose(
      self,
      branch: BranchMap,
      reset: ReversibleMap,
      layout: Layout | None = None,
  ) -> 'SparseState':
    """Applies the adjoint of a register-local `superpose`.

    `reset` maps a configuration in the image of `branch` back to the
    configuration the branch was prepared from.

    Args:
      branch: The branching map being undone.
      reset: Maps every output configuration to its branch input.
      layout: The layout of the branch inputs, by default the current layout.

    Returns:
      The state before the preparation.

    Raises:
      InvariantViolation: If this state has support outside the prepared
        sector.
    """
    target = layout or self.layout
    accumulator = collections.defaultdict(complex)
    weights = {}
    for config, amplitude in self.terms.items():
      source = as_config(reset(config))
      if source not in weights:
        weights[source] = {as_config(c): complex(w) for c, w in branch(source)}
      weight = weights[source].get(config, 0j)
      accumulator[source] += weight.conjugate() * amplitude
    for source in accumulator:
      target.check(source)
    result = SparseState._build(target, accumulator, self.pruned_mass)
    if abs(result.norm() - self.norm()) > NORM_ATOL:
      raise checks.InvariantViolation(
          'State has support outside the prepared sector: norm dropped from'
          f' {self.norm()} to {result.norm()}'
      )
    return result

  def inner(self, other: 'SparseState') -> complex:
    """<self|other>."""
    self._check_same_layout(other)
    if len(self) <= len(other):
      total = sum(
          a.conjugate() * other.terms.get(c, 0j)
          for c, a in self.terms.items()
      )
    else:
      total = sum(
          self.terms.get(c, 0j).conjugate() * b
          for c, b in other.terms.items()
      )
    return complex(total)

  def fidelity(self, other: 'SparseState') -> float:
    """|<self|other>|^2."""
    return abs(self.inner(other)) ** 2

  def distribution(self, name: str) -> dict[tuple[int, ...], float]:
    """Born-rule distribution of the contents of register `name`."""
    index = self.layout.index(name)
    probabilities = collections.defaultdict(float)
    for config, amplitude in self.terms.items():
      probabilities[config[index]] += abs(amplitude) ** 2
    total = sum(probabilities.values())
    if total == 0:
      raise ValueError('Cannot measure the empty state.')
    return {k: probabilities[k] / total for k in sorted(probabilities)}

  def measure(
      self, name: str, rng: RngType = None
  ) -> tuple[tuple[int, ...], 'SparseState']:
    """Samples register `name` and collapses the state onto the outcome."""
    rng = np.random.default_rng(rng)
    distribution = self.distribution(name)
    outcomes = list(distribution)
    probabilities = np.array([distribution[o] for o in outcomes])
    outcome = outcomes[rng.choice(len(outcomes), p=probabilities)]
    index = self.layout.index(name)
    collapsed, _ = self.project(lambda config: config[index] == outcome)
    return outcome, collapsed

  def project(
      self, predicate: Callable[[BasisConfig], bool]
  ) -> tuple['SparseState', float]:
    """Projects onto the terms satisfying `predicate` and renormalizes.

    Args:
      predicate: Selects the basis configurations to keep.

    Returns:
      The renormalized projected state and the probability of the projection.

    Raises:
      ValueError: If the projection has probability zero.
    """
    total = self.norm() ** 2
    kept = {c: a for c, a in self.terms.items() if predicate(c)}
    mass = sum(abs(a) ** 2 for a in kept.values())
    if mass == 0:
      raise ValueError('Projection onto a sector with zero probability.')
    projected = SparseState(self.layout, kept, self.pruned_mass)
    return projected.scaled(np.sqrt(total / mass)), mass / total

  def tensor(self, other: 'SparseState') -> 'SparseState':
    """The product state over the concatenated layout."""
    layout = self.layout.concat(other.layout)
    return SparseState._build(
        layout,
        {
            c1 + c2: a1 * a2
            for c1, a1 in self.terms.items()
            for c2, a2 in other.terms.items()
        },
        self.pruned_mass + other.pruned_mass,
    )

  def drop_registers(
      self,
      names: Iterable[str],
      expected: Mapping[str, Sequence[int]] | None = None,
  ) -> 'SparseState':
    """Removes registers that hold one fixed value on every term.

    Args:
      names: Registers to remove.
      expected: Optional required value of each removed register.

    Returns:
      The state over the remaining registers.

    Raises:
      InvariantViolation: If a removed register varies across terms or differs
        from its expected value.
    """
    names = tuple(names)
    indices = [self.layout.index(name) for name in names]
    expected = {
        self.layout.index(k): tuple(v) for k, v in (expected or {}).items()
    }
    seen = dict(expected)
    terms = {}
    for config, amplitude in self.terms.items():
      for i in indices:
        value = seen.setdefault(i, config[i])
        if config[i] != value:
          raise checks.InvariantViolation(
              f'Register {self.layout.registers[i].name} is not in a fixed'
              f' state: found {config[i]} and {value}'
          )
      key = tuple(v for i, v in enumerate(config) if i not in indices)
      terms[key] = amplitude
    return SparseState(self.layout.without(names), terms, self.pruned_mass)

  def _schmidt_matrix(
      self, names: Sequence[str]
  ) -> tuple[np.ndarray, list[BasisConfig], list[BasisConfig]]:
    indices = [self.layout.index(name) for name in names]
    rest = [i for i in range(len(self.layout)) if i not in indices]
    split = {
        config: (
            tuple(config[i] for i in indices),
            tuple(config[i] for i in rest),
        )
        for config in self.terms
    }
    rows = sorted({a for a, _ in split.values()})
    cols = sorted({b for _, b in split.values()})
    row_index = {a: i for i, a in enumerate(rows)}
    col_index = {b: i for i, b in enumerate(cols)}
    matrix = np.zeros((len(rows), len(cols)), dtype=complex)
    for config, (a, b) in split.items():
      matrix[row_index[a], col_index[b]] = self.terms[config]
    return matrix, rows, cols

  def entanglement_entropy(self, names: Sequence[str]) -> float:
    """Von Neumann entropy (bits) of the reduced state on `names`."""
    if not self.terms:
      raise ValueError('Entropy of the empty state is undefined.')
    matrix, _, _ = self._schmidt_matrix(names)
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    p = singular_values**2 / np.sum(singular_values**2)
    p = p[p > 0]
    return float(max(0.0, -np.sum(p * np.log2(p))))

  def factor(
      self, names: Sequence[str], atol: float = 1e-9
  ) -> tuple['SparseState', 'SparseState']:
    """Splits a product state across the bipartition `names` | rest.

    Args:
      names: Registers of the first factor.
      atol: Largest entanglement entropy accepted as a product state.

    Returns:
      The factor over `names` (unit norm, largest amplitude real positive) and
      the factor over the remaining registers, in layout order.

    Raises:
      InvariantViolation: If the state is entangled across the bipartition.
    """
    entropy = self.entanglement_entropy(names)
    if entropy > atol:
      raise checks.InvariantViolation(
          f'Registers {tuple(names)} are entangled with the rest (entropy'
          f' {entropy:.3e})'
      )
    matrix, rows, cols = self._schmidt_matrix(names)
    u, s, vh = np.linalg.svd(matrix)
    left, right = u[:, 0], s[0] * vh[0, :]
    phase = left[np.argmax(np.abs(left))]
    phase /= abs(phase)
    left, right = left / phase, right * phase
    first = Layout(tuple(self.layout[name] for name in names))
    second = self.layout.without(names)
    return (
        SparseState._build(first, dict(zip(rows, left))),
        SparseState._build(second, dict(zip(cols, right))),
    )

  def marginal_fidelity(
      self, target: 'SparseState', names: Sequence[str] | None = None
  ) -> float:
    """<target|rho|target> for the reduced state rho on `names`.

    Args:
      target: A pure state over the registers `names`.
      names: Registers to keep, by default those of `target`'s layout.

    Returns:
      The fidelity of the reduced state with `target`.
    """
    names = tuple(names or target.layout.names)
    indices = [self.layout.index(name) for name in names]
    rest = [i for i in range(len(self.layout)) if i not in indices]
    overlaps = collections.defaultdict(complex)
    for config, amplitude in self.terms.items():
      weight = target.terms.get(tuple(config[i] for i in indices))
      if weight is not None:
        key = tuple(config[i] for i in rest)
        overlaps[key] += weight.conjugate() * amplitude
    norm = self.norm() ** 2 * target.norm() ** 2
    return float(sum(abs(v) ** 2 for v in overlaps.values()) / norm)

  def to_model(self) -> StateModel:
    return StateModel(
        layout=[
            RegisterModel(name=r.name, arity=r.arity, bound=r.bound)
            for r in self.layout.registers
        ],
        terms=[
            TermModel(
                basis=[list(values) for values in config],
                re=amplitude.real,
                im=amplitude.imag,
            )
            for config, amplitude in self.sorted_terms()
        ],
    )

  def to_dict(self) -> dict[str, Any]:
    """The JSON-compatible form of `to_model`."""
    return _STATE_ADAPTER.dump_python(self.to_model(), mode='json')

  def to_json(self) -> str:
    return _STATE_ADAPTER.dump_json(self.to_model(), indent=2).decode()

  @classmethod
  def from_model(cls, model: StateModel) -> 'SparseState':
    layout = Layout(
        tuple(Register(r.name, r.arity, r.bound) for r in model.layout)
    )
    return cls.from_terms(
        layout, [(t.basis, complex(t.re, t.im)) for t in model.terms]
    )

  @classmethod
  def from_json(cls, text: str | bytes) -> 'SparseState':
    return cls.from_model(_STATE_ADAPTER.validate_json(text))


def lift(
    f: ReversibleMap, state: SparseState, layout: Layout | None = None
) -> SparseState:
  return state.lift(f, layout)


def superpose(
    branch: BranchMap, state: SparseState, layout: Layout | None = None
) -> SparseState:
  return state.superpose(branch, layout)


def inner(a: SparseState, b: SparseState) -> complex:
  return a.inner(b)


def distribution(
    state: SparseState, name: str
) -> dict[tuple[int, ...], float]:
  return state.distribution(name)


def measure_register(
    state: SparseState, name: str, rng: RngType = None
) -> tuple[tuple[int, ...], SparseState]:
  return state.measure(name, rng)
