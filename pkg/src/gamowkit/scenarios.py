"""Scenario runner: decay/growth curves, lineshapes, and table emission.

A :class:`Scenario` pins a resonance, a canonical state, and a uniform time
grid; :func:`run_decay` and :func:`evolution_table` sweep the grid through
the semigroup evolution.  Results come back as :class:`ResultTable` values
that serialize to CSV (shortest round-trip float formatting) and JSON and
parse back without loss.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .core import Arrow, GamowState, Kind, ResonancePole, canonical_state
from .evolution import DomainViolationError, branch_for, evolve


@dataclass
class ResultTable:
    """A small column-labelled table of floats."""

    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([repr(float(x)) for x in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ResultTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        rows = [tuple(float(x) for x in row) for row in reader if row]
        return cls(tuple(header), rows)

    def to_json(self) -> str:
        return json.dumps({"columns": list(self.columns),
                           "rows": [list(row) for row in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "ResultTable":
        data = json.loads(text)
        return cls(tuple(data["columns"]),
                   [tuple(float(x) for x in row) for row in data["rows"]])


@dataclass(frozen=True)
class Scenario:
    """A canonical state swept over a uniform time grid.

    The grid must lie inside the half-domain of the state's branch (t = 0
    is inside both halves) and must have at least two points.
    """

    pole: ResonancePole
    arrow: Arrow
    kind: Kind
    regime: int
    t_min: float
    t_max: float
    steps: int

    def __post_init__(self) -> None:
        if self.steps < 2:
            raise ValueError(f"a scenario grid needs at least 2 steps, got {self.steps}")
        if not self.t_max >= self.t_min:
            raise ValueError(f"t_max={self.t_max} must not precede t_min={self.t_min}")

    def state(self) -> GamowState:
        return canonical_state(self.arrow, self.kind, self.regime, self.pole)

    def times(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.steps)

    def checked_times(self) -> np.ndarray:
        domain = branch_for(self.state()).domain
        times = self.times()
        for t in times:
            if not domain.contains(float(t)):
                raise DomainViolationError(
                    f"grid point t={float(t)} lies outside the {domain.half.value} "
                    f"half-domain of branch {branch_for(self.state()).label}"
                )
        return times


def run_decay(scenario: Scenario) -> ResultTable:
    """Survival probability and evolution factor over the scenario grid.

    Columns are (t, survival, factor_real, factor_imag) with
    survival = |factor|^2 / |amplitude|^2, which equals
    exp(growth_sign * Gamma * t) on the scenario's branch.
    """
    state = scenario.state()
    norm = abs(state.amplitude) ** 2
    rows = []
    for t in scenario.checked_times():
        factor = evolve(state, float(t))
        rows.append((float(t), abs(factor) ** 2 / norm, factor.real, factor.imag))
    return ResultTable(("t", "survival", "factor_real", "factor_imag"), rows)


def evolution_table(scenario: Scenario) -> ResultTable:
    """Evolution factor over the scenario grid, columns (t, factor_real,
    factor_imag)."""
    state = scenario.state()
    rows = []
    for t in scenario.checked_times():
        factor = evolve(state, float(t))
        rows.append((float(t), factor.real, factor.imag))
    return ResultTable(("t", "factor_real", "factor_imag"), rows)


def lorentzian_density(pole: ResonancePole, energies) -> np.ndarray:
    """Unit-area Lorentzian lineshape attached to a resonance pole."""
    e = np.asarray(energies, dtype=float)
    half_width = 0.5 * pole.width
    return (pole.width / (2.0 * np.pi)) / ((e - pole.energy) ** 2 + half_width**2)


def lineshape(pole: ResonancePole, energies) -> ResultTable:
    """Lineshape table with columns (energy, density).

    density(E) = (Gamma / 2 pi) / ((E - E_R)^2 + Gamma^2 / 4): peak value
    2 / (pi Gamma) at E = E_R, half the peak at E_R +- Gamma/2, and unit
    area over the whole real axis.
    """
    e = np.asarray(energies, dtype=float)
    if e.size == 0:
        raise ValueError("lineshape needs a nonempty energy grid")
    density = lorentzian_density(pole, e)
    rows = [(float(ei), float(di)) for ei, di in zip(e, density)]
    return ResultTable(("energy", "density"), rows)
