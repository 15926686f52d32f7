"""Circular clock-value arithmetic and the simulated clock hierarchy.

Every clock in the system (hardware, local, logical, alien) counts integer
hardware ticks and wraps at a common modulus ``tau_max``.  All comparisons
between clock values therefore go through the wrap-aware operators below:
``wrap_add``/``wrap_sub`` for offset arithmetic and ``ring_dist`` for the
circular distance, which is symmetric and never exceeds ``tau_max // 2``.
"""

from __future__ import annotations

from dataclasses import dataclass


def wrap_add(a: int, b: int, tau_max: int) -> int:
    """(a + b) mod tau_max."""
    return (a + b) % tau_max


def wrap_sub(a: int, b: int, tau_max: int) -> int:
    """(a - b) mod tau_max; always non-negative."""
    return (a - b) % tau_max


def ring_dist(a: int, b: int, tau_max: int) -> int:
    """Circular distance min{a - b, b - a} (both mod tau_max)."""
    d = (a - b) % tau_max
    return d if d <= tau_max - d else tau_max - d


@dataclass(frozen=True)
class RingSpace:
    """A fixed ring [[tau_max]] bundling the wrap-aware operators."""

    tau_max: int

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.tau_max

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.tau_max

    def dist(self, a: int, b: int) -> int:
        d = (a - b) % self.tau_max
        return d if d <= self.tau_max - d else self.tau_max - d

    def contains(self, a: int) -> bool:
        return 0 <= a < self.tau_max


class HardwareClock:
    """Read-only drifting tick counter.

    The reading advances monotonically modulo ``tau_max`` and is never
    written by any algorithm; timers with fixed tick timeouts are built on
    it.  Each actual tick duration lies in ``[(1-rho)*T_H, (1+rho)*T_H]``;
    ``drift_rate`` is the (possibly per-tick varying) relative deviation.
    """

    def __init__(self, nominal_tick: float, drift_rate: float, reading: int,
                 tau_max: int):
        if not (0 <= reading < tau_max):
            raise ValueError("hardware reading outside [[tau_max]]")
        self.nominal_tick = nominal_tick
        self.drift_rate = drift_rate
        self.reading = reading
        self.tau_max = tau_max

    def tick_duration(self) -> float:
        """Duration of the next tick in seconds."""
        return self.nominal_tick * (1.0 + self.drift_rate)

    def advance(self, n_ticks: int = 1) -> int:
        """Count n ticking events; wraps at tau_max."""
        if n_ticks < 0:
            raise ValueError("hardware clocks never run backwards")
        self.reading = (self.reading + n_ticks) % self.tau_max
        return self.reading


@dataclass
class ClockSet:
    """The writable offsets deriving local/logical/alien time from hardware.

    local   C = (H + local_offset)            mod tau_max
    logical L = (C + logical_offset)          mod tau_max
    alien   Y = (H + alien_offset)            mod tau_max
    """

    tau_max: int
    local_offset: int = 0
    logical_offset: int = 0
    alien_offset: int = 0

    def local(self, hw_reading: int) -> int:
        return (hw_reading + self.local_offset) % self.tau_max

    def logical(self, hw_reading: int) -> int:
        return (hw_reading + self.local_offset + self.logical_offset) % self.tau_max

    def alien(self, hw_reading: int) -> int:
        return (hw_reading + self.alien_offset) % self.tau_max

    def adjust_local(self, delta: int) -> None:
        self.local_offset = (self.local_offset + delta) % self.tau_max

    def set_local_to(self, value: int, hw_reading: int) -> None:
        """Overwrite the local clock so that C(hw_reading) == value."""
        self.local_offset = (value - hw_reading) % self.tau_max
