"""Constraint system for the protocol's timing parameters.

``derive_params`` solves the full chain of timing constraints with the
minimal (tight) assignment: every ``>=`` constraint is set to its right-hand
side and every ``=`` constraint is computed directly.  The chain is circular
(delta_I depends on T_max, which depends on tau0, which depends on the theta
chain, which depends on delta_I; k_pls couples in as well), so the solver
runs a fixed-point iteration from the initial guess ``delta_I = eps2``.

``validate`` mechanically re-checks every constraint row against a candidate
parameter set and returns the violated rows as data.

Two rows are handled in their as-built form rather than as printed in the
underlying constraint tables (see the repository notes):

* ``delta16`` is assigned ``sigma11 + delta_p``.  The printed bound
  (``sigma11 + delta_d*(1+rho)``) is inconsistent with the published
  reference configurations, which were clearly produced with the
  ``delta_p`` form; we reproduce those.
* the consistency bound ``sigma2 >= (k_pls-1)*(tau0+2*delta_I)/(1-rho)``
  does not hold for two of the four reference configurations.  It is
  checked and reported as a *warning*, never as a violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields


class ParameterError(ValueError):
    """Base class for parameter-system failures."""


class InvariantViolation(ParameterError):
    """System parameters violate a structural precondition (e.g. n0 <= 5*f0)."""


class NonConvergence(ParameterError):
    """The fixed-point iteration failed to settle (inputs physically inconsistent)."""


class UnknownCase(ParameterError):
    """No preset configuration with that name."""


@dataclass(frozen=True)
class SystemParams:
    """Input parameters of one deployment.

    Durations are SI seconds; ``rho`` is dimensionless.  ``tick`` is the
    nominal hardware tick T_H used when converting to integer tick counts.
    """

    n0: int                 # terminal nodes
    f0: int                 # Byzantine bound on terminals
    n1: int                 # abstracted bridge nodes
    f1: int                 # Byzantine bound on bridges
    rho: float              # max hardware drift rate
    eps0: float             # remote-reading precision of the underlying protocol
    eps2: float             # alien-clock precision (|Y - t| <= eps2/2)
    delta_p: float          # max processing delay
    delta_d: float          # max end-to-end message delay
    delta0: float           # max updating-span duration
    Delta0: float = 1.0     # underlying-protocol stabilization time
    e0: float | None = None  # external reference precision bound (default eps2/2)
    tick: float = 8e-9      # nominal hardware tick T_H

    def __post_init__(self):
        if self.e0 is None:
            object.__setattr__(self, "e0", self.eps2 / 2.0)

    def check(self) -> None:
        if self.f0 < 1 or self.f1 < 1:
            raise InvariantViolation(
                "f0 and f1 must be >= 1 (the fault-free configuration is rejected; "
                "the convergence rate is undefined for f0 = 0)")
        if self.n0 <= 5 * self.f0:
            raise InvariantViolation(f"need n0 > 5*f0, got n0={self.n0}, f0={self.f0}")
        if self.n1 <= 2 * self.f1:
            raise InvariantViolation(f"need n1 > 2*f1, got n1={self.n1}, f1={self.f1}")
        if not (0.0 <= self.rho < 1.0):
            raise InvariantViolation(f"need 0 <= rho < 1, got {self.rho}")
        for name in ("eps0", "eps2", "delta_p", "delta_d", "delta0", "Delta0", "tick"):
            if getattr(self, name) <= 0.0:
                raise InvariantViolation(f"{name} must be strictly positive")
        if self.eps2 / 2.0 > self.e0 * (1 + 1e-12):
            raise InvariantViolation("need eps2/2 <= e0")


def compute_alpha(n0: int, f0: int) -> float:
    """Convergence rate of the fault-tolerant averaging round.

    alpha = 1 / (floor((n0 - 2*f0 - 1) / f0) + 1).  Raises ZeroDivisionError
    for f0 = 0: the rate is undefined and the artifact rejects that input.
    """
    if f0 == 0:
        raise ZeroDivisionError("convergence rate undefined for f0 = 0")
    return 1.0 / ((n0 - 2 * f0 - 1) // f0 + 1)


@dataclass(frozen=True)
class DerivedParams:
    """The solved constant set consumed by the protocol and the simulator.

    All time-valued fields are SI seconds at full double precision except
    ``tau_max``, which is an integer tick count (it must be an exact
    multiple of 4*k_pls*tau0 in ticks).
    """

    delta1: float
    delta2: float
    delta3: float
    delta4: float
    delta5: float
    delta6: float
    delta7: float
    delta8: float
    delta9: float
    delta10: float
    delta11: float
    delta12: float
    delta13: float
    delta14: float
    delta15: float
    delta16: float
    delta17: float
    delta_I: float
    tau0: float
    tau_max: int            # ticks
    k_pls: int
    alpha: float
    eps_b: float
    theta1: float
    theta2: float
    theta3: float
    theta4: float
    theta5: float
    sigma1: float
    sigma2: float
    sigma3: float
    sigma4: float
    sigma5: float
    sigma6: float
    sigma7: float
    sigma8: float
    sigma9: float
    sigma10: float
    sigma11: float
    sigma12: float
    sigma13: float
    sigma14: float
    T_min: float
    T_max: float
    Delta_C: float
    eps1: float
    rho1: float
    Delta1: float
    eta1: float
    eta2: float
    warnings: tuple = field(default_factory=tuple)

    def report(self) -> dict:
        """Values rounded the way the reference configuration table prints them.

        Fine time constants carry six decimals; alpha three; eps1, rho1 and
        Delta_C two significant digits; Delta1 one decimal.
        """
        out = {}
        for i in range(1, 18):
            name = f"delta{i}"
            out[name] = round(getattr(self, name), 6)
        out["delta_I"] = round(self.delta_I, 6)
        out["tau0"] = round(self.tau0, 6)
        out["alpha"] = float(f"{self.alpha:.3f}")
        out["k_pls"] = self.k_pls
        out["eta1"] = round(self.eta1, 6)
        out["eps1"] = float(f"{self.eps1:.1e}")
        out["rho1"] = float(f"{self.rho1:.1e}")
        out["Delta_C"] = float(f"{self.Delta_C:.1e}")
        out["Delta1"] = round(self.Delta1, 1)
        return out


# Internal fixed-point state, in dependency order.
_FIX_KEYS = ("delta_I", "tau0", "T_max", "eps1", "eps_b", "sigma11", "k_pls")


def derive_params(sp: SystemParams, max_iter: int = 1000,
                  rel_tol: float = 1e-9) -> DerivedParams:
    """Solve the constraint chain with the tight assignment.

    The iteration order follows the dependency structure: theta chain, then
    the per-round deltas, then the pulse chain and sigma chain, then
    T_min/T_max, then delta_I and k_pls/eps1, looping until the largest
    relative change drops below ``rel_tol``.  Raises ``NonConvergence``
    when the map is not a contraction for the given inputs (e.g. rho too
    large) and ``InvariantViolation`` when the inputs are structurally bad.
    """
    sp.check()
    n0, f0, n1, f1 = sp.n0, sp.f0, sp.n1, sp.f1
    rho, e0s, e2 = sp.rho, sp.eps0, sp.eps2
    dp, dd, d0 = sp.delta_p, sp.delta_d, sp.delta0
    a = compute_alpha(n0, f0)

    dI = e2           # initial guess
    eps1 = 0.0
    kp = 3
    prev = None
    v = {}
    for _ in range(max_iter):
        th1 = 2 * dI / (1 - rho) + dp
        d2 = th1 * (1 + rho)
        th2 = th1 + d2 / (1 - rho) + dp
        th3 = th2 + d0
        d1 = (th1 + dd) * (1 + rho)
        d3 = th3 * (1 + rho) + d1
        th4 = (d3 - d1 + 2 * dI) / (1 - rho) + dp
        d4 = th1 * (1 + rho) + 2 * rho * th4
        th5 = th4 + d4 / (1 - rho) + dp
        d5 = dI + 2 * rho * th2 + 2 * e0s
        d6 = dI + 2 * rho * th4 + 4 * e0s

        d13 = eps1 + dd * (1 + rho)
        s7 = d13 / (1 - rho) + dd
        d10 = (s7 + dd) * (1 + rho)
        d11 = d10 + dp
        d7 = eps1 + (dd + d11 / (1 - rho) + dp) * (1 + rho) + e0s
        d8 = d11 * (1 - rho) / (1 + rho) - e0s
        d12 = d7 + d8 + d11 + 2 * dp
        s3 = 2 * dp + d11 / (1 - rho)
        s8 = d11 / (1 + rho)
        s9 = (s3 - s8 + dd) * (1 + rho)
        s10 = d12 * (1 + rho)
        s11 = (d7 + s9 + 2 * rho * s10) * (1 + rho) + dp
        d16 = s11 + dp          # as-built form; see module docstring
        d17 = d16 + dp
        d9 = d12 + d17 * (1 - rho) / (1 + rho) - e0s
        s4 = 2 * dp + d17 / (1 - rho)
        s12 = s3 + s4 + s10 + s11 + d0

        tau0 = max(d6 + (th5 + d0) * (1 + rho),
                   d12 + dI + (s12 + d0) * (1 + rho))
        T_min = (tau0 - d6) / (1 + rho) - dp
        T_max = (tau0 + d6) / (1 - rho) + dp
        eps_b = 11 * e0s + rho * (3 * th1 + 2 * th5 + 4 * th4 - 4 * th3 + T_max)
        eps1 = 4 * eps_b / (1 - a)

        # smallest k with alpha^(k-1)*delta_I <= eps_b/(1-alpha), floored at 3
        bound = eps_b / (1 - a)
        kp = 1
        while a ** (kp - 1) * dI > bound:
            kp += 1
            if kp > 300:
                raise NonConvergence("k_pls grows without bound")
        kp = max(kp, 3)

        dI_new = max(s11 + 2 * e0s + 2 * rho * tau0, e2 + 2 * rho * kp * T_max)
        if not math.isfinite(dI_new) or dI_new > 1e15:
            raise NonConvergence(
                "parameter chain diverges; inputs are physically inconsistent "
                f"(rho={rho}, delta_I blew up)")

        state = (dI_new, tau0, T_max, eps1, eps_b, s11, float(kp))
        if prev is not None:
            change = max(abs(x - y) / max(abs(y), 1e-300)
                         for x, y in zip(state, prev))
            if change < rel_tol:
                dI = dI_new
                break
        prev = state
        dI = dI_new
    else:
        raise NonConvergence(
            f"no fixed point after {max_iter} iterations "
            f"(last delta_I={dI!r}); inputs are physically inconsistent")

    v = dict(delta1=d1, delta2=d2, delta3=d3, delta4=d4, delta5=d5, delta6=d6,
             delta7=d7, delta8=d8, delta9=d9, delta10=d10, delta11=d11,
             delta12=d12, delta13=d13, delta16=d16, delta17=d17,
             theta1=th1, theta2=th2, theta3=th3, theta4=th4, theta5=th5,
             sigma3=s3, sigma4=s4, sigma7=s7, sigma8=s8, sigma9=s9,
             sigma10=s10, sigma11=s11, sigma12=s12,
             tau0=tau0, T_min=T_min, T_max=T_max, eps_b=eps_b, eps1=eps1,
             delta_I=dI, k_pls=kp, alpha=a)

    d14 = kp * (tau0 + 2 * dI) + dp
    d15 = kp * (tau0 - 2 * dI) - dp
    s1 = d10 / (1 - rho) + dd
    s2 = d15 / (1 + rho) - dd - d10 / (1 - rho)
    s5 = s7 + d14 / (1 - rho) + dp
    s6 = s1 + s2 + s3 + (tau0 + d1 + dI) * (1 + rho) + dp
    s13 = 2 * dI / (1 - rho) + dp + s6
    s14 = s6 + (kp - 1) * T_max
    Delta_C = d14 / (1 - rho) + dp
    eta1 = 2.0 ** (3 * (f1 - n1) + 1)
    eta2 = 2.0 ** (f1 - n1 + 1)
    rho1 = rho + eps1 / T_min
    Delta1 = Delta_C + 3 * kp * tau0 / eta1 + s14

    warnings = []
    if d15 < (3 * s1 + s3) * (1 + rho):
        # delta15 is an equality; if its trailing consistency bound fails the
        # inputs leave no valid assignment for the pulse guard.
        warnings.append(
            "delta15 consistency bound violated: "
            f"{d15!r} < {(3 * s1 + s3) * (1 + rho)!r}")
    s2_floor = (kp - 1) * (tau0 + 2 * dI) / (1 - rho)
    if s2 < s2_floor:
        warnings.append(
            "relaxed consistency bound sigma2 >= (k_pls-1)*(tau0+2*delta_I)/(1-rho) "
            f"does not hold ({s2!r} < {s2_floor!r}); the reference configurations "
            "III and IV share this property")

    tau0_t = math.ceil(tau0 / sp.tick)
    d14_t = math.ceil(d14 / sp.tick)
    base = 4 * kp * tau0_t
    tau_max_t = base * max(1, -(-4 * d14_t // base))   # ceil division

    return DerivedParams(
        delta14=d14, delta15=d15,
        sigma1=s1, sigma2=s2, sigma5=s5, sigma6=s6, sigma13=s13, sigma14=s14,
        tau_max=tau_max_t, Delta_C=Delta_C, rho1=rho1, Delta1=Delta1,
        eta1=eta1, eta2=eta2, warnings=tuple(warnings), **v)


@dataclass(frozen=True)
class Violation:
    """One violated constraint row: which table, which row, both sides."""

    table: str      # "I" or "II"
    row: int        # row number within the table
    name: str       # constraint nickname, e.g. "delta1", "tau_max"
    lhs: float
    rhs: float
    detail: str = ""

    def __str__(self):
        rel = "=" if "=" in self.detail else ">="
        return (f"Table {self.table} row {self.row} ({self.name}): "
                f"{self.lhs!r} {rel} {self.rhs!r} fails {self.detail}")


def _req_ge(out, table, row, name, lhs, rhs, tol=1e-9):
    if lhs < rhs - tol * max(abs(rhs), 1e-15):
        out.append(Violation(table, row, name, lhs, rhs, "(>= constraint)"))


def _req_eq(out, table, row, name, lhs, rhs, tol=1e-9):
    if abs(lhs - rhs) > tol * max(abs(rhs), 1e-15):
        out.append(Violation(table, row, name, lhs, rhs, "(= constraint)"))


def validate(sp: SystemParams, d: DerivedParams) -> list[Violation]:
    """Re-check every constraint row; returns the violated rows as data.

    Empty iff the parameter set satisfies the whole table (the relaxed
    sigma2 consistency bound is reported via ``DerivedParams.warnings``
    instead, see module docstring).  Seconds-valued rows are checked at
    full precision; the tau_max row is checked on integer ticks.
    """
    rho, e0s, dp, dd, d0 = sp.rho, sp.eps0, sp.delta_p, sp.delta_d, sp.delta0
    out: list[Violation] = []

    # Table I: parameters referenced by the algorithms.
    _req_ge(out, "I", 1, "delta1", d.delta1, (d.theta1 + dd) * (1 + rho))
    _req_ge(out, "I", 2, "delta2", d.delta2, d.theta1 * (1 + rho))
    _req_ge(out, "I", 3, "delta3", d.delta3, d.theta3 * (1 + rho) + d.delta1)
    _req_ge(out, "I", 4, "delta4", d.delta4, d.theta1 * (1 + rho) + 2 * rho * d.theta4)
    _req_ge(out, "I", 5, "delta5", d.delta5, d.delta_I + 2 * rho * d.theta2 + 2 * e0s)
    _req_ge(out, "I", 6, "delta6", d.delta6, d.delta_I + 2 * rho * d.theta4 + 4 * e0s)
    _req_ge(out, "I", 7, "delta7", d.delta7,
            d.eps1 + (dd + d.delta11 / (1 - rho) + dp) * (1 + rho) + e0s)
    _req_eq(out, "I", 8, "delta8", d.delta8, d.delta11 * (1 - rho) / (1 + rho) - e0s)
    _req_eq(out, "I", 9, "delta9", d.delta9,
            d.delta12 + d.delta17 * (1 - rho) / (1 + rho) - e0s)
    _req_ge(out, "I", 10, "delta10", d.delta10, (d.sigma7 + dd) * (1 + rho))
    _req_ge(out, "I", 11, "delta11", d.delta11, d.delta10 + dp)
    _req_ge(out, "I", 12, "delta12", d.delta12,
            d.delta7 + d.delta8 + d.delta11 + 2 * dp)
    _req_ge(out, "I", 13, "delta13", d.delta13, d.eps1 + dd * (1 + rho))
    _req_ge(out, "I", 14, "delta14", d.delta14,
            d.k_pls * (d.tau0 + 2 * d.delta_I) + dp)
    _req_eq(out, "I", 15, "delta15", d.delta15,
            d.k_pls * (d.tau0 - 2 * d.delta_I) - dp)
    _req_ge(out, "I", 15, "delta15", d.delta15,
            (3 * d.sigma1 + d.sigma3) * (1 + rho))
    _req_ge(out, "I", 16, "delta16", d.delta16, d.sigma11 + dp)
    _req_ge(out, "I", 17, "delta17", d.delta17, d.delta16 + dp)
    _req_ge(out, "I", 18, "tau0", d.tau0,
            max(d.delta6 + (d.theta5 + d0) * (1 + rho),
                d.delta12 + d.delta_I + (d.sigma12 + d0) * (1 + rho)))
    # tau_max: checked on ticks so the modular condition is exact.
    tau0_t = math.ceil(d.tau0 / sp.tick)
    d14_t = math.ceil(d.delta14 / sp.tick)
    if d.tau_max < 4 * d14_t:
        out.append(Violation("I", 19, "tau_max", d.tau_max, 4 * d14_t,
                             "(>= 4*delta14 in ticks)"))
    if d.tau_max % (4 * d.k_pls * tau0_t) != 0:
        out.append(Violation("I", 19, "tau_max", d.tau_max, 4 * d.k_pls * tau0_t,
                             "(= multiple of 4*k_pls*tau0 in ticks)"))
    # k_pls: same selection logic as the derivation, avoiding ceil() noise.
    bound = d.eps_b / (1 - d.alpha)
    need = d.eps1 / 2 - bound
    k = 1
    while d.alpha ** (k - 1) * d.delta_I > need and k <= 300:
        k += 1
    _req_ge(out, "I", 20, "k_pls", d.k_pls, max(k, 3))

    # Table II: the related parameters.
    _req_eq(out, "II", 1, "theta1", d.theta1, 2 * d.delta_I / (1 - rho) + dp)
    _req_eq(out, "II", 2, "theta2", d.theta2,
            d.theta1 + d.delta2 / (1 - rho) + dp)
    _req_eq(out, "II", 3, "theta3", d.theta3, d.theta2 + d0)
    _req_eq(out, "II", 4, "theta4", d.theta4,
            (d.delta3 - d.delta1 + 2 * d.delta_I) / (1 - rho) + dp)
    _req_eq(out, "II", 5, "theta5", d.theta5,
            d.theta4 + d.delta4 / (1 - rho) + dp)
    _req_eq(out, "II", 6, "sigma1", d.sigma1, d.delta10 / (1 - rho) + dd)
    _req_eq(out, "II", 7, "sigma2", d.sigma2,
            d.delta15 / (1 + rho) - dd - d.delta10 / (1 - rho))
    # row 8 (sigma2 lower bound) is the relaxed consistency check carried in
    # DerivedParams.warnings; it is intentionally not a violation.
    _req_eq(out, "II", 9, "sigma3", d.sigma3, 2 * dp + d.delta11 / (1 - rho))
    _req_eq(out, "II", 10, "sigma4", d.sigma4, 2 * dp + d.delta17 / (1 - rho))
    _req_eq(out, "II", 11, "sigma5", d.sigma5,
            d.sigma7 + d.delta14 / (1 - rho) + dp)
    _req_eq(out, "II", 12, "sigma6", d.sigma6,
            d.sigma1 + d.sigma2 + d.sigma3
            + (d.tau0 + d.delta1 + d.delta_I) * (1 + rho) + dp)
    _req_eq(out, "II", 13, "sigma7", d.sigma7, d.delta13 / (1 - rho) + dd)
    _req_eq(out, "II", 14, "sigma8", d.sigma8, d.delta11 / (1 + rho))
    _req_eq(out, "II", 15, "sigma9", d.sigma9,
            (d.sigma3 - d.sigma8 + dd) * (1 + rho))
    _req_eq(out, "II", 16, "sigma10", d.sigma10, d.delta12 * (1 + rho))
    _req_eq(out, "II", 17, "sigma11", d.sigma11,
            (d.delta7 + d.sigma9 + 2 * rho * d.sigma10) * (1 + rho) + dp)
    _req_eq(out, "II", 18, "sigma12", d.sigma12,
            d.sigma3 + d.sigma4 + d.sigma10 + d.sigma11 + d0)
    _req_eq(out, "II", 19, "sigma13", d.sigma13,
            2 * d.delta_I / (1 - rho) + dp + d.sigma6)
    _req_eq(out, "II", 20, "sigma14", d.sigma14,
            d.sigma6 + (d.k_pls - 1) * d.T_max)
    _req_eq(out, "II", 21, "alpha", d.alpha, compute_alpha(sp.n0, sp.f0))
    _req_eq(out, "II", 22, "eps_b", d.eps_b,
            11 * e0s + rho * (3 * d.theta1 + 2 * d.theta5 + 4 * d.theta4
                              - 4 * d.theta3 + d.T_max))
    _req_ge(out, "II", 23, "delta_I", d.delta_I,
            max(d.sigma11 + 2 * e0s + 2 * rho * d.tau0,
                sp.eps2 + 2 * rho * d.k_pls * d.T_max))
    _req_eq(out, "II", 24, "T_min", d.T_min, (d.tau0 - d.delta6) / (1 + rho) - dp)
    _req_eq(out, "II", 25, "T_max", d.T_max, (d.tau0 + d.delta6) / (1 - rho) + dp)
    _req_eq(out, "II", 26, "Delta_C", d.Delta_C, d.delta14 / (1 - rho) + dp)
    if not d.eps1 > 2 * d.eps_b / (1 - d.alpha):
        out.append(Violation("II", 27, "eps1", d.eps1, 2 * d.eps_b / (1 - d.alpha),
                             "(strict > constraint)"))
    _req_eq(out, "II", 27, "rho1", d.rho1, rho + d.eps1 / d.T_min)
    _req_eq(out, "II", 28, "Delta1", d.Delta1,
            d.Delta_C + 3 * d.k_pls * d.tau0 / d.eta1 + d.sigma14)
    _req_eq(out, "II", 28, "eta1", d.eta1, 2.0 ** (3 * (sp.f1 - sp.n1) + 1))
    return out


# The four reference configurations.  Delta0 for cases III/IV is not pinned
# by the source material (only "can be supported by sub-microsecond-class
# underlying protocols"); 50 ms is a conservative stand-in.
_PRESETS = {
    "I": SystemParams(n0=6, f0=1, n1=3, f1=1, rho=1e-4, eps0=1e-6, eps2=0.05,
                      delta_p=1e-4, delta_d=1e-3, delta0=1.0, Delta0=1.0),
    "II": SystemParams(n0=100, f0=3, n1=3, f1=1, rho=1e-4, eps0=1e-6, eps2=0.05,
                       delta_p=1e-4, delta_d=1e-3, delta0=1.0, Delta0=1.0),
    "III": SystemParams(n0=6, f0=1, n1=5, f1=2, rho=1e-6, eps0=1e-7, eps2=0.001,
                        delta_p=2e-5, delta_d=1e-4, delta0=5e-5, Delta0=0.05),
    "IV": SystemParams(n0=100, f0=3, n1=3, f1=1, rho=1e-6, eps0=1e-7, eps2=0.001,
                       delta_p=2e-5, delta_d=1e-4, delta0=5e-5, Delta0=0.05),
}

CASE_NAMES = tuple(_PRESETS)


def preset(case_id: str) -> SystemParams:
    """Input block of one of the four named reference configurations."""
    try:
        return _PRESETS[case_id.upper()]
    except KeyError:
        raise UnknownCase(f"unknown case {case_id!r}; valid: {', '.join(_PRESETS)}")


@dataclass(frozen=True)
class TickParams:
    """Protocol constants converted to integer hardware ticks.

    Seconds are converted by ceiling at the nominal tick, matching how a
    deployment would configure timer registers.  ``qclear`` is the local
    phase bound tau0 + (1+rho)*delta_d after which a seen-pulse flag is
    cleared.
    """

    tick: float
    tau_max: int
    tau0: int
    k_pls: int
    delta: tuple       # delta[1..17] by index (index 0 unused)
    qclear: int
    n0: int
    f0: int
    n1: int
    f1: int

    @property
    def header_period(self) -> int:
        return self.k_pls * self.tau0


def to_ticks(sp: SystemParams, d: DerivedParams) -> TickParams:
    t = sp.tick
    deltas = [0] + [math.ceil(getattr(d, f"delta{i}") / t) for i in range(1, 18)]
    tau0_t = math.ceil(d.tau0 / t)
    qclear = tau0_t + math.ceil((1 + sp.rho) * sp.delta_d / t)
    return TickParams(tick=t, tau_max=d.tau_max, tau0=tau0_t, k_pls=d.k_pls,
                      delta=tuple(deltas), qclear=qclear,
                      n0=sp.n0, f0=sp.f0, n1=sp.n1, f1=sp.f1)


def params_as_rows(sp: SystemParams, d: DerivedParams) -> list[tuple[str, object]]:
    """Flat (name, value) rows for table/CSV output: inputs then deriveds."""
    rows: list[tuple[str, object]] = [
        ("n0", sp.n0), ("f0", sp.f0), ("n1", sp.n1), ("f1", sp.f1),
        ("rho", sp.rho), ("eps0", sp.eps0), ("eps2", sp.eps2),
        ("delta_p", sp.delta_p), ("delta_d", sp.delta_d),
        ("delta0", sp.delta0), ("Delta0", sp.Delta0), ("e0", sp.e0),
        ("tick", sp.tick),
    ]
    for f in fields(DerivedParams):
        if f.name == "warnings":
            continue
        rows.append((f.name, getattr(d, f.name)))
    return rows
