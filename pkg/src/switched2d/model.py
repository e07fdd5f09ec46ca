"""Data model for the uncertain 2D switched plant.

Per-mode matrices with norm-bounded uncertainty, actuator-fault intervals,
delay specifications, boundary data, and switching signals with average
dwell-time accounting.  All realization families are deterministic functions
of the lattice point, so simulations replay bit-identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import matrixcore as mc
from .errors import (
    DelayOrderError,
    DimError,
    DwellTimeViolation,
    FaultOutOfRange,
    IncompleteModel,
    InvalidMatrix,
)


@dataclass
class ModeMatrices:
    """Constant matrices of one subsystem.

    A and A_d are n x n with the horizontal/vertical block split
    (n1 + n2 = n); B is n x n_u; H is n x p; E and E_d are q x n.
    """

    A: np.ndarray
    A_d: np.ndarray
    B: np.ndarray
    H: np.ndarray
    E: np.ndarray
    E_d: np.ndarray
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("A", "A_d", "B", "H", "E", "E_d"):
            setattr(self, name, np.atleast_2d(np.asarray(getattr(self, name), dtype=float)))
        n = self.n1 + self.n2
        if self.n1 < 1 or self.n2 < 1:
            raise DimError("state split sizes must be positive")
        if self.A.shape != (n, n):
            raise DimError(f"A must be {n}x{n}, got {self.A.shape}")
        if self.A_d.shape != (n, n):
            raise DimError(f"A_d must be {n}x{n}, got {self.A_d.shape}")
        if self.B.shape[0] != n:
            raise DimError(f"B must have {n} rows, got {self.B.shape}")
        if self.H.shape[0] != n:
            raise DimError(f"H must have {n} rows, got {self.H.shape}")
        if self.E.shape[1] != n or self.E_d.shape[1] != n:
            raise DimError("E and E_d must have n columns")
        if self.E.shape[0] != self.E_d.shape[0]:
            raise DimError("E and E_d must have matching row counts")
        for name in ("A", "A_d", "B", "H", "E", "E_d"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise InvalidMatrix(f"{name} has non-finite entries")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def n_u(self) -> int:
        return self.B.shape[1]

    @property
    def p(self) -> int:
        return self.H.shape[1]

    @property
    def q(self) -> int:
        return self.E.shape[0]


@dataclass
class FaultSpec:
    """Per-channel actuator effectiveness intervals for one mode."""

    low: np.ndarray
    high: np.ndarray

    def __post_init__(self):
        self.low = np.asarray(self.low, dtype=float).ravel()
        self.high = np.asarray(self.high, dtype=float).ravel()
        if self.low.shape != self.high.shape:
            raise DimError("fault bounds low/high must have equal length")
        if np.any(self.low < 0) or np.any(self.high < self.low):
            raise InvalidMatrix("fault bounds need 0 <= low <= high per channel")

    @property
    def n_u(self) -> int:
        return self.low.size


def derive_fault_stats(spec: FaultSpec):
    """Midpoint matrix and relative-radius matrix of the effectiveness intervals.

    Channels with low = high = 0 (stuck-off actuators) take midpoint 0 and
    radius 0; the relative radius is undefined there and the channel carries
    no multiplicative uncertainty.
    """
    mid = 0.5 * (spec.low + spec.high)
    xi = np.zeros_like(mid)
    denom = spec.high + spec.low
    live = denom > 0
    xi[live] = (spec.high[live] - spec.low[live]) / denom[live]
    return np.diag(mid), np.diag(xi)


def sample_fault_matrix(spec: FaultSpec, omega: np.ndarray):
    """Validate a sampled effectiveness vector and return (Omega, Theta).

    Theta is the relative deviation from the midpoint, so that
    Omega = Omega0 (I + Theta) with |Theta| bounded by the radius matrix.
    """
    omega = np.asarray(omega, dtype=float).ravel()
    if omega.shape != spec.low.shape:
        raise DimError("sampled effectiveness has wrong channel count")
    tol = 1e-12
    if np.any(omega < spec.low - tol) or np.any(omega > spec.high + tol):
        raise FaultOutOfRange(
            f"effectiveness {omega} outside bounds [{spec.low}, {spec.high}]"
        )
    omega0, _ = derive_fault_stats(spec)
    mid = np.diag(omega0)
    theta = np.zeros_like(mid)
    live = mid > 0
    theta[live] = (omega[live] - mid[live]) / mid[live]
    return np.diag(omega), np.diag(theta)


class FaultRealization:
    """Deterministic per-lattice-point effectiveness, one mode."""

    def omega(self, i: int, j: int) -> np.ndarray:
        raise NotImplementedError


@dataclass
class MidpointFaults(FaultRealization):
    spec: FaultSpec

    def omega(self, i, j):
        return 0.5 * (self.spec.low + self.spec.high)


@dataclass
class ConstantFaults(FaultRealization):
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).ravel()

    def omega(self, i, j):
        return self.values


@dataclass
class SinusoidalFaults(FaultRealization):
    """offset_l + amplitude_l * wave(pi * frequency * (i + j)) per channel."""

    offsets: np.ndarray
    amplitudes: np.ndarray
    wave: str = "sin"
    frequency: float = 0.5

    def __post_init__(self):
        self.offsets = np.asarray(self.offsets, dtype=float).ravel()
        self.amplitudes = np.asarray(self.amplitudes, dtype=float).ravel()
        if self.wave not in ("sin", "cos"):
            raise ValueError("wave must be 'sin' or 'cos'")

    def omega(self, i, j):
        phase = math.pi * self.frequency * (i + j)
        w = math.sin(phase) if self.wave == "sin" else math.cos(phase)
        return self.offsets + self.amplitudes * w


@dataclass
class SeededFaults(FaultRealization):
    """Uniform draw inside the bounds, seeded per lattice point."""

    spec: FaultSpec
    seed: int = 0

    def omega(self, i, j):
        rng = np.random.default_rng((self.seed, i, j))
        u = rng.uniform(size=self.spec.n_u)
        return self.spec.low + u * (self.spec.high - self.spec.low)


class UncertaintyRealization:
    """Deterministic norm-bounded uncertainty factor, one mode."""

    def matrix(self, i: int, j: int) -> np.ndarray:
        raise NotImplementedError


def _spectral_clip(f: np.ndarray) -> np.ndarray:
    norm_sq = mc.sym_eigvals(f.T @ f)[-1] if f.size else 0.0
    norm = math.sqrt(max(norm_sq, 0.0))
    if norm > 1.0:
        return f / norm
    return f


@dataclass
class ZeroUncertainty(UncertaintyRealization):
    p: int
    q: int

    def matrix(self, i, j):
        return np.zeros((self.p, self.q))


@dataclass
class ConstantUncertainty(UncertaintyRealization):
    value: np.ndarray

    def __post_init__(self):
        self.value = _spectral_clip(np.atleast_2d(np.asarray(self.value, dtype=float)))

    def matrix(self, i, j):
        return self.value


@dataclass
class SinusoidalDiagonalUncertainty(UncertaintyRealization):
    """wave(pi * frequency * (i + j)) on the diagonal of a p x q factor."""

    p: int
    q: int
    wave: str = "sin"
    frequency: float = 0.5

    def __post_init__(self):
        if self.wave not in ("sin", "cos"):
            raise ValueError("wave must be 'sin' or 'cos'")

    def matrix(self, i, j):
        phase = math.pi * self.frequency * (i + j)
        w = math.sin(phase) if self.wave == "sin" else math.cos(phase)
        f = np.zeros((self.p, self.q))
        np.fill_diagonal(f, w)
        return f


@dataclass
class SeededUncertainty(UncertaintyRealization):
    p: int
    q: int
    seed: int = 0

    def matrix(self, i, j):
        rng = np.random.default_rng((self.seed, i, j))
        return _spectral_clip(rng.uniform(-1.0, 1.0, size=(self.p, self.q)))


def sample_uncertain_matrices(mode: ModeMatrices, unc: UncertaintyRealization, i, j):
    """(A + H F E, A_d + H F E_d) at lattice point (i, j)."""
    f = unc.matrix(i, j)
    if f.shape != (mode.p, mode.q):
        raise DimError(f"uncertainty factor must be {mode.p}x{mode.q}, got {f.shape}")
    hf = mode.H @ f
    return mode.A + hf @ mode.E, mode.A_d + hf @ mode.E_d


class DelayFunction:
    """Integer-valued delay as a function of one lattice index."""

    def value(self, t: int) -> int:
        raise NotImplementedError

    def scan_bounds(self, horizon: int = 1000):
        vals = [self.value(t) for t in range(horizon + 1)]
        return min(vals), max(vals)


@dataclass
class ConstantDelay(DelayFunction):
    d: int

    def value(self, t):
        return int(self.d)


@dataclass
class SinusoidalDelay(DelayFunction):
    """round(base + amplitude * sin(pi * frequency * t))."""

    base: float = 2.0
    amplitude: float = 1.0
    frequency: float = 0.5

    def value(self, t):
        return int(round(self.base + self.amplitude * math.sin(math.pi * self.frequency * t)))


@dataclass
class TableDelay(DelayFunction):
    """Periodic table of integer delays."""

    values: list

    def __post_init__(self):
        if not self.values:
            raise DelayOrderError("delay table must be non-empty")
        self.values = [int(v) for v in self.values]

    def value(self, t):
        return self.values[t % len(self.values)]


@dataclass
class DelaySpec:
    """Delay bounds plus the named realizations along each direction."""

    d_hL: int
    d_hH: int
    d_vL: int
    d_vH: int
    d_h: DelayFunction = None
    d_v: DelayFunction = None

    def __post_init__(self):
        for b in (self.d_hL, self.d_hH, self.d_vL, self.d_vH):
            if b < 0:
                raise DelayOrderError("delay bounds must be nonnegative")
        if self.d_hH < self.d_hL or self.d_vH < self.d_vL:
            raise DelayOrderError("upper delay bound smaller than lower bound")
        if self.d_h is None:
            self.d_h = ConstantDelay(self.d_hL)
        if self.d_v is None:
            self.d_v = ConstantDelay(self.d_vL)
        lo, hi = self.d_h.scan_bounds()
        if lo < self.d_hL or hi > self.d_hH:
            raise DelayOrderError(
                f"horizontal delay realization spans [{lo}, {hi}] outside "
                f"[{self.d_hL}, {self.d_hH}]"
            )
        lo, hi = self.d_v.scan_bounds()
        if lo < self.d_vL or hi > self.d_vH:
            raise DelayOrderError(
                f"vertical delay realization spans [{lo}, {hi}] outside "
                f"[{self.d_vL}, {self.d_vH}]"
            )


@dataclass
class BoundaryConditions:
    """Finitely supported boundary data.

    Horizontal states are given on rows i in [-d_hH, 0] for columns j <= z1
    (edge row i = 0 takes ``h_edge``, earlier rows ``h_history``) and vanish
    for j > z1; vertical states mirror this along the other axis.  Explicit
    tables override the scalar profile when provided: ``h_table[(i, j)]``.
    """

    z1: int
    z2: int
    h_edge: np.ndarray
    v_edge: np.ndarray
    h_history: float = 0.0
    v_history: float = 0.0
    h_table: dict = None
    v_table: dict = None

    def __post_init__(self):
        if self.z1 < 1 or self.z2 < 1:
            raise DimError("boundary support extents z1, z2 must be positive")
        self.h_edge = np.asarray(self.h_edge, dtype=float).ravel()
        self.v_edge = np.asarray(self.v_edge, dtype=float).ravel()

    def xh(self, i: int, j: int) -> np.ndarray:
        """Horizontal boundary value at i <= 0."""
        n1 = self.h_edge.size
        if self.h_table is not None and (i, j) in self.h_table:
            return np.asarray(self.h_table[(i, j)], dtype=float).ravel()
        if j > self.z1 or j < 0:
            return np.zeros(n1)
        if i == 0:
            return self.h_edge.copy()
        return np.full(n1, self.h_history)

    def xv(self, i: int, j: int) -> np.ndarray:
        """Vertical boundary value at j <= 0."""
        n2 = self.v_edge.size
        if self.v_table is not None and (i, j) in self.v_table:
            return np.asarray(self.v_table[(i, j)], dtype=float).ravel()
        if i > self.z2 or i < 0:
            return np.zeros(n2)
        if j == 0:
            return self.v_edge.copy()
        return np.full(n2, self.v_history)


@dataclass
class SwitchingSignal:
    """Mode schedule on the anti-diagonal index m = i + j.

    ``instants`` are the strictly increasing switch points; ``modes`` has one
    entry per segment (len(instants) + 1), starting with the mode active at
    m = 0.
    """

    instants: list
    modes: list
    tau_a: float
    n0: float = 1.0

    def __post_init__(self):
        self.instants = [int(m) for m in self.instants]
        if any(b <= a for a, b in zip(self.instants, self.instants[1:])):
            raise DwellTimeViolation("switch instants must be strictly increasing")
        if len(self.modes) != len(self.instants) + 1:
            raise DimError("need one mode per switching segment")
        if self.tau_a <= 0:
            raise DwellTimeViolation("average dwell time must be positive")

    def mode_at(self, m: int) -> int:
        k = 0
        for inst in self.instants:
            if m >= inst:
                k += 1
            else:
                break
        return self.modes[k]

    def count_switches(self, z: int, d: int) -> int:
        """Number of switch instants strictly inside the open interval (z, d)."""
        if z > d:
            raise ValueError("need z <= D")
        return sum(1 for m in self.instants if z < m < d)

    def verify_dwell(self, m_max: int) -> None:
        """Exhaustively check the dwell-time bound on all interval pairs."""
        for z in range(0, m_max + 1):
            for d in range(z, m_max + 1):
                if self.count_switches(z, d) > self.n0 + (d - z) / self.tau_a + 1e-12:
                    raise DwellTimeViolation(
                        f"N_sigma({z}, {d}) = {self.count_switches(z, d)} exceeds "
                        f"{self.n0} + {(d - z)}/{self.tau_a}"
                    )


def generate_dwell_switching(
    n_modes: int,
    tau_a: float,
    n0: float = 1.0,
    m_max: int = 80,
    instants=None,
    modes=None,
    start_mode: int = 1,
    phase: int = 0,
) -> SwitchingSignal:
    """Round-robin (period ceil(tau_a)) or explicit switching signal.

    Explicit instants are verified exhaustively against the dwell-time bound
    and raise ``DwellTimeViolation`` when they fail it.
    """
    if tau_a <= 0:
        raise DwellTimeViolation("average dwell time must be positive")
    if instants is None:
        period = math.ceil(tau_a)
        instants = [m for m in range(period + phase, m_max, period)]
        modes = [1 + (start_mode - 1 + s) % n_modes for s in range(len(instants) + 1)]
    else:
        instants = [int(m) for m in instants]
        if modes is None:
            modes = [1 + (start_mode - 1 + s) % n_modes for s in range(len(instants) + 1)]
    sig = SwitchingSignal(instants, list(modes), tau_a, n0)
    sig.verify_dwell(m_max)
    return sig


@dataclass
class SwitchedModel:
    """The full plant: subsystems, faults, uncertainty, delays, boundary."""

    modes: list
    fault_specs: list
    delays: DelaySpec
    boundary: BoundaryConditions
    uncertainties: list = None
    fault_realizations: list = None

    def __post_init__(self):
        if not self.modes:
            raise IncompleteModel("need at least one mode")
        m0 = self.modes[0]
        for mm in self.modes:
            if (mm.n1, mm.n2, mm.n_u, mm.p, mm.q) != (m0.n1, m0.n2, m0.n_u, m0.p, m0.q):
                raise DimError("all modes must share the same dimensions")
        if len(self.fault_specs) != len(self.modes):
            raise IncompleteModel("need one fault spec per mode")
        for fs in self.fault_specs:
            if fs.n_u != m0.n_u:
                raise DimError("fault spec channel count must match input count")
        if self.boundary.h_edge.size != m0.n1 or self.boundary.v_edge.size != m0.n2:
            raise DimError("boundary value dimensions must match the state split")
        if self.uncertainties is None:
            self.uncertainties = [ZeroUncertainty(m0.p, m0.q) for _ in self.modes]
        if self.fault_realizations is None:
            self.fault_realizations = [MidpointFaults(fs) for fs in self.fault_specs]

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    @property
    def dims(self):
        m0 = self.modes[0]
        return {"n1": m0.n1, "n2": m0.n2, "n_u": m0.n_u, "p": m0.p, "q": m0.q}

    def fault_stats(self, k: int):
        """(midpoint, radius) diagonal matrices for mode k (1-based)."""
        return derive_fault_stats(self.fault_specs[k - 1])

    def sampled_fault(self, k: int, i: int, j: int):
        """(Omega, Theta) for mode k at lattice point (i, j)."""
        return sample_fault_matrix(
            self.fault_specs[k - 1], self.fault_realizations[k - 1].omega(i, j)
        )

    def sampled_matrices(self, k: int, i: int, j: int):
        """(A_hat, A_d_hat) for mode k at lattice point (i, j)."""
        return sample_uncertain_matrices(
            self.modes[k - 1], self.uncertainties[k - 1], i, j
        )
