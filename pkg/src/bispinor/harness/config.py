"""Suite configuration and validation for the verification harness."""

from __future__ import annotations

from dataclasses import dataclass, field

# Random gamma draws are clipped away from +-1 by this margin (1/omega
# blows up as |gamma| -> 1).
GAMMA_MARGIN = 1e-3


class ConfigError(ValueError):
    """Raised for invalid suite configurations (CLI exit code 2)."""


@dataclass(frozen=True)
class SuiteConfig:
    gamma_values: tuple[float, ...] = (0.0, 0.3, -0.3, 0.6, -0.6, 0.9, -0.9)
    beta_values: tuple[float, ...] = (0.5, 1.0, 2.0)
    p1_range: tuple[float, float] = (-3.0, 3.0)
    p2_range: tuple[float, float] = (-3.0, 3.0)
    grid_points: int = 12
    samples: int = 50
    seed: int = 7
    tolerance: float = 1e-10
    output_path: str | None = None
    fmt: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "gamma_values",
                           tuple(float(g) for g in self.gamma_values))
        object.__setattr__(self, "beta_values",
                           tuple(float(b) for b in self.beta_values))
        self.validate()

    def validate(self) -> None:
        if not self.gamma_values:
            raise ConfigError("at least one gamma value is required")
        for g in self.gamma_values:
            if not abs(g) < 1.0:
                raise ConfigError(
                    f"gamma={g} outside the open unit interval (-1, 1)"
                )
        if not self.beta_values:
            raise ConfigError("at least one beta value is required")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.grid_points < 2:
            raise ConfigError("grid needs at least 2 points per axis")
        if self.tolerance <= 0:
            raise ConfigError("tolerance must be positive")
        for lo, hi in (self.p1_range, self.p2_range):
            if not lo < hi:
                raise ConfigError("momentum range must satisfy lo < hi")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("format must be 'csv' or 'json'")

    def nonzero_betas(self) -> tuple[float, ...]:
        betas = tuple(b for b in self.beta_values if b != 0.0)
        if not betas:
            raise ConfigError("degenerate splitting")
        return betas
