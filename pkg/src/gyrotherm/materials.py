"""Material property tables and the resistive drive heat source.

All properties are constant within a solve; buoyancy alone sees the
temperature dependence (Boussinesq treatment). Air properties are
evaluated at the table's reference temperature with standard
correlations (ideal gas density, beta = 1/T0, Sutherland viscosity and
conductivity), solids use fixed handbook values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveResistance, NonPositiveVolume

# Material ids used on grids. Values are stable (serialized in VTK dumps).
AIR = 0
SILICON = 1
PYREX_GLASS = 2
HEAT_SOURCE_ALUMINUM = 3

MATERIAL_NAMES = {
    AIR: "Air",
    SILICON: "Silicon",
    PYREX_GLASS: "PyrexGlass",
    HEAT_SOURCE_ALUMINUM: "HeatSourceAluminum",
}

R_SPECIFIC_AIR = 287.058  # J/(kg K)
ATMOSPHERIC_PRESSURE = 101325.0  # Pa


@dataclass(frozen=True)
class MaterialProps:
    """Constant properties of one material.

    mu and beta are only meaningful for fluids; solids carry zeros.
    """

    rho0: float          # kg/m^3
    k: float             # W/(m K)
    cp: float            # J/(kg K)
    mu: float = 0.0      # Pa s (fluids)
    beta: float = 0.0    # 1/K (fluids)
    is_fluid: bool = False

    def __post_init__(self):
        if self.rho0 <= 0 or self.k <= 0 or self.cp <= 0:
            raise ValueError("rho0, k, cp must be positive")
        if self.is_fluid:
            if self.mu <= 0 or self.beta <= 0:
                raise ValueError("fluids need positive mu and beta")
        elif self.mu != 0 or self.beta != 0:
            raise ValueError("solids must have mu = beta = 0")


@dataclass(frozen=True)
class MaterialTable:
    """Properties per material id plus the shared reference state."""

    props: dict[int, MaterialProps]
    T0: float                      # reference (operating) temperature, K
    gravity: tuple[float, float] = (0.0, -9.81)  # m/s^2

    def __post_init__(self):
        if self.T0 <= 0:
            raise ValueError("reference temperature must be positive")

    def __getitem__(self, material_id: int) -> MaterialProps:
        return self.props[material_id]

    def covers(self, material_ids) -> bool:
        return all(int(m) in self.props for m in np.unique(material_ids))


def air_viscosity(T: float) -> float:
    """Sutherland's law for dry air, Pa s."""
    return 1.716e-5 * (T / 273.15) ** 1.5 * (273.15 + 110.4) / (T + 110.4)


def air_conductivity(T: float) -> float:
    """Sutherland-form correlation for dry air conductivity, W/(m K)."""
    return 0.0241 * (T / 273.15) ** 1.5 * (273.15 + 194.0) / (T + 194.0)


def default_table(T0: float, gravity: tuple[float, float] = (0.0, -9.81),
                  p_atm: float = ATMOSPHERIC_PRESSURE) -> MaterialTable:
    """Standard-reference materials for the glass-silicon-glass stack.

    Air is referenced at T0: ideal-gas density at p_atm, beta = 1/T0,
    Sutherland mu and k. Solid values are room-temperature handbook
    numbers (their weak temperature dependence is ignored by design).
    """
    if T0 <= 0:
        raise ValueError("T0 must be positive")
    props = {
        AIR: MaterialProps(
            rho0=p_atm / (R_SPECIFIC_AIR * T0),
            k=air_conductivity(T0),
            cp=1007.0,
            mu=air_viscosity(T0),
            beta=1.0 / T0,
            is_fluid=True,
        ),
        SILICON: MaterialProps(rho0=2329.0, k=148.0, cp=700.0),
        PYREX_GLASS: MaterialProps(rho0=2230.0, k=1.14, cp=835.0),
        HEAT_SOURCE_ALUMINUM: MaterialProps(rho0=2700.0, k=237.0, cp=897.0),
    }
    return MaterialTable(props=props, T0=T0, gravity=gravity)


@dataclass(frozen=True)
class JouleSource:
    """Volumetric heat release of the AC drive, time-averaged (RMS)."""

    i_rms: float        # A
    resistance: float   # ohm
    wire_volume: float  # m^3 (wire cross-section area x 1 m depth in 2D)
    s_h: float = field(init=False)  # W/m^3

    def __post_init__(self):
        object.__setattr__(
            self, "s_h", self.i_rms ** 2 * self.resistance / self.wire_volume
        )

    @property
    def total_power(self) -> float:
        """Dissipated power, W (per metre of depth when 2D)."""
        return self.i_rms ** 2 * self.resistance


def joule_source(i_rms: float, resistance: float, wire_volume: float) -> JouleSource:
    """Build the drive heat source from electrical parameters."""
    if resistance <= 0:
        raise NonPositiveResistance(f"resistance must be positive, got {resistance}")
    if wire_volume <= 0:
        raise NonPositiveVolume(f"wire volume must be positive, got {wire_volume}")
    if i_rms < 0:
        raise ValueError(f"i_rms must be nonnegative, got {i_rms}")
    return JouleSource(i_rms=i_rms, resistance=resistance, wire_volume=wire_volume)
