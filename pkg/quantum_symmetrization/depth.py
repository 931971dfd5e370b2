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

"""Symbolic circuit-depth accounting.

Depth is counted in comparator layers (one layer of disjoint quantized
comparators) and elementary layers (one layer of parallel register-wide
additions, subtractions or copies). Gate-level synthesis of a comparator adds
only a double-logarithmic factor in the element size, which is not tracked.
"""

import dataclasses


@dataclasses.dataclass(frozen=True)
class DepthReport:
  """Layer counts and ancilla usage of a circuit.

  Reports compose sequentially with `+`: layer counts add and ancilla usage is
  the maximum, since ancillas are returned clean between stages.

  Attributes:
    comparator_layers: Number of comparator layers.
    elementary_layers: Number of adder / copy layers.
    ancilla_qubits: Peak number of ancilla qubits.
  """

  comparator_layers: int = 0
  elementary_layers: int = 0
  ancilla_qubits: int = 0

  def __post_init__(self):
    for field in dataclasses.fields(self):
      if getattr(self, field.name) < 0:
        raise ValueError(
            f'{field.name} must be non-negative, found'
            f' {getattr(self, field.name)}'
        )

  @property
  def total_layers(self) -> int:
    return self.comparator_layers + self.elementary_layers

  def __add__(self, other: 'DepthReport') -> 'DepthReport':
    return DepthReport(
        comparator_layers=self.comparator_layers + other.comparator_layers,
        elementary_layers=self.elementary_layers + other.elementary_layers,
        ancilla_qubits=max(self.ancilla_qubits, other.ancilla_qubits),
    )

  def parallel(self, other: 'DepthReport') -> 'DepthReport':
    """Runs both circuits side by side on disjoint registers."""
    return DepthReport(
        comparator_layers=max(self.comparator_layers, other.comparator_layers),
        elementary_layers=max(self.elementary_layers, other.elementary_layers),
        ancilla_qubits=self.ancilla_qubits + other.ancilla_qubits,
    )

  def repeated(self, times: int) -> 'DepthReport':
    if times < 0:
      raise ValueError(f'times must be non-negative, found {times}')
    return DepthReport(
        comparator_layers=self.comparator_layers * times,
        elementary_layers=self.elementary_layers * times,
        ancilla_qubits=self.ancilla_qubits if times else 0,
    )

  def with_ancillas(self, qubits: int) -> 'DepthReport':
    """Adds `qubits` ancillas held for the duration of this circuit."""
    return dataclasses.replace(
        self, ancilla_qubits=self.ancilla_qubits + qubits
    )

  def as_dict(self) -> dict[str, int]:
    return dataclasses.asdict(self)
