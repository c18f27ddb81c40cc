"""Configuration records and validation.

All durations are microseconds (exact integers where possible), rates are
bit/us, distances are meters, the device density is devices/m^2. Records are
frozen dataclasses: once validated they are safe to share between threads
and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConfigError

BASIC = "basic"
RTS_CTS = "rts_cts"
CONVENTIONAL = "conventional"
MODIFIED = "modified"

MECHANISMS = (BASIC, RTS_CTS)
VARIANTS = (CONVENTIONAL, MODIFIED)


@dataclass(frozen=True)
class MacTiming:
    """Per-slot and per-frame time constants of the MAC layer.

    ``payload_time_us`` is always ``payload_bits / channel_rate`` exactly,
    never stored, so the two can not drift apart.
    """

    idle_slot_us: float = 50
    sifs_us: float = 28
    difs_us: float = 128
    header_us: float = 400       # 272-bit MAC + 128-bit PHY header at 1 Mbit/s
    payload_bits: float = 65536  # 8 kB frame body
    channel_rate_bit_per_us: float = 1.0
    ack_us: float = 112
    rts_us: float = 160
    cts_us: float = 112
    ack_timeout_us: float = 300
    cts_timeout_us: float = 300

    @property
    def payload_time_us(self) -> float:
        return self.payload_bits / self.channel_rate_bit_per_us


@dataclass(frozen=True)
class ScenarioConfig:
    """Deployment scenario: coverage disk, collector motion, device field.

    ``cw_min``/``retry_limit`` parameterize the conventional protocol;
    ``cw_min_max``/``retry_limit_max`` are the per-cluster allocation caps
    of the modified protocol. All four are kept so a scenario can be run
    under either variant.
    """

    radius_m: float = 1000.0
    speed_mps: float = 10.0
    density_per_m2: float = 50e-6      # 50 devices per km^2
    mechanism: str = BASIC
    variant: str = CONVENTIONAL
    cw_min: int = 8
    retry_limit: int = 7
    cw_min_max: int = 8
    retry_limit_max: int = 7


@dataclass(frozen=True)
class Tolerances:
    """Numeric knobs for the fixed-point solver and series truncation."""

    fixed_point_eps: float = 1e-9
    max_iterations: int = 10000
    pmf_tail_eps: float = 1e-12
    damping: float = 0.5


DEFAULT_TIMING = MacTiming()
DEFAULT_TOLERANCES = Tolerances()


def validate(scenario: ScenarioConfig, timing: MacTiming) -> list[str]:
    """Check every invariant; return a list of named violations (empty if valid).

    Total on any input record: never raises, every violated invariant is
    reported with its own code.
    """
    v: list[str] = []

    def bad(code, detail):
        v.append(f"{code}: {detail}")

    if not scenario.radius_m > 0:
        bad("nonpositive-radius", f"radius_m={scenario.radius_m}")
    if not scenario.speed_mps > 0:
        bad("nonpositive-speed", f"speed_mps={scenario.speed_mps}")
    if scenario.density_per_m2 < 0:
        bad("negative-density", f"density_per_m2={scenario.density_per_m2}")
    if scenario.mechanism not in MECHANISMS:
        bad("unknown-mechanism", f"mechanism={scenario.mechanism!r}")
    if scenario.variant not in VARIANTS:
        bad("unknown-variant", f"variant={scenario.variant!r}")
    if scenario.cw_min < 1:
        bad("zero-window", f"cw_min={scenario.cw_min}")
    if scenario.retry_limit < 0:
        bad("negative-retry-limit", f"retry_limit={scenario.retry_limit}")
    if scenario.cw_min_max < 1:
        bad("zero-window-cap", f"cw_min_max={scenario.cw_min_max}")
    if scenario.retry_limit_max < 0:
        bad("negative-retry-limit-cap",
            f"retry_limit_max={scenario.retry_limit_max}")

    if not timing.idle_slot_us > 0:
        bad("nonpositive-idle-slot", f"idle_slot_us={timing.idle_slot_us}")
    if not timing.channel_rate_bit_per_us > 0:
        bad("nonpositive-rate",
            f"channel_rate_bit_per_us={timing.channel_rate_bit_per_us}")
    for name in ("sifs_us", "difs_us", "header_us", "payload_bits", "ack_us",
                 "rts_us", "cts_us", "ack_timeout_us", "cts_timeout_us"):
        if getattr(timing, name) < 0:
            bad("negative-duration", f"{name}={getattr(timing, name)}")
    return v


def validated(scenario: ScenarioConfig,
              timing: MacTiming) -> tuple[ScenarioConfig, MacTiming]:
    """Return the pair unchanged if valid, else raise ConfigError listing
    every violation."""
    violations = validate(scenario, timing)
    if violations:
        raise ConfigError(violations)
    return scenario, timing


def with_overrides(scenario: ScenarioConfig, **kwargs) -> ScenarioConfig:
    """Copy of the scenario with the given fields replaced."""
    return replace(scenario, **kwargs)
