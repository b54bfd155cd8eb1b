from dataclasses import dataclass, field
from enum import Enum

from .errors import ConfigError
from .intervals import ComplexInterval, RealInterval


class Method(str, Enum):
    LAURENT_HORNER = "laurent_horner"
    CLENSHAW_INTERVAL = "clenshaw_interval"
    ICA_EIG = "ica_eig"
    RECURRENCE_DIRECT = "recurrence_direct"

    def __str__(self):
        return self.value


ALL_METHODS = tuple(Method)


class Status(str, Enum):
    OK = "ok"
    UNBOUNDED = "unbounded"
    DEGENERATE = "degenerate"   # ica_eig only: 0 in sqrt(1 - x^2)
    DOMAIN = "domain"           # x misses [-1, 1]
    ERROR = "error"

    def __str__(self):
        return self.value


FAILED_STATUSES = (Status.DEGENERATE, Status.DOMAIN, Status.ERROR)


def parse_methods(text: str) -> tuple:
    """'all' or a comma separated list of method ids"""
    if text.strip().lower() == "all":
        return ALL_METHODS
    out = []
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            m = Method(name)
        except ValueError:
            valid = ", ".join(m.value for m in Method)
            raise ConfigError(f"unknown method {name!r} (expected one of: {valid})") from None
        if m not in out:
            out.append(m)
    if not out:
        raise ConfigError("empty method list")
    return tuple(out)


@dataclass(frozen=True)
class ChebExpansion:
    """p(x) = sum c_k T_k(x) with interval coefficients c_0..c_n"""
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("expansion needs at least one coefficient")
        coeffs = tuple(self.coeffs)
        for k, c in enumerate(coeffs):
            if not isinstance(c, RealInterval):
                raise TypeError(f"coefficient {k} is not a RealInterval")
            if not c.is_finite:
                raise ValueError(f"coefficient {k} is not finite: {c}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class ClenshawState:
    b_hi: RealInterval   # b_k
    b_lo: RealInterval   # b_{k+1}


@dataclass(frozen=True)
class TransformedState:
    v1: ComplexInterval
    v2: ComplexInterval


@dataclass(frozen=True)
class EnclosureResult:
    method: Method
    value: RealInterval | None
    elapsed_ns: int
    status: Status
    detail: str = ""

    @property
    def radius(self) -> float:
        if self.value is None:
            return float("inf")
        return self.value.radius


@dataclass(frozen=True)
class PointSample:
    point_id: int
    x: RealInterval


@dataclass
class OracleLimits:
    max_degree: int = 256
    max_bits: int = 200_000


DEFAULT_ORACLE_DEGREE = 64


@dataclass
class BenchConfig:
    degree: int = 1024
    num_points: int = 100
    decay_rho: float = 1.01
    coeff_radius: float = 0.0
    point_radius: float = 0.0
    seed: int = 42
    methods: tuple = field(default_factory=lambda: ALL_METHODS)
    boundary_bias: float = 0.1
    repeats: int = 3            # timing repetitions, median reported
    workers: int | None = None  # None: cpu count, capped by CHEB_ENCLOSE_THREADS

    def __post_init__(self):
        if isinstance(self.methods, str):
            self.methods = parse_methods(self.methods)
        self.methods = tuple(Method(m) for m in self.methods)
        if self.degree < 0:
            raise ConfigError(f"degree must be >= 0, got {self.degree}")
        if self.num_points < 1:
            raise ConfigError(f"num_points must be >= 1, got {self.num_points}")
        if not self.decay_rho > 1.0:
            raise ConfigError(f"decay_rho must be > 1, got {self.decay_rho}")
        if self.coeff_radius < 0 or self.point_radius < 0:
            raise ConfigError("radii must be >= 0")
        if not 0.0 <= self.boundary_bias <= 1.0:
            raise ConfigError(f"boundary_bias must be in [0, 1], got {self.boundary_bias}")
        if self.repeats < 1:
            raise ConfigError(f"repeats must be >= 1, got {self.repeats}")
        if self.workers is not None and self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if not self.methods:
            raise ConfigError("at least one method is required")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")


# Degree 9150 at 1000 random intervals, coefficients inflated by ~2e-15 and
# points of radius ~1e-15; "tight" repeats it with the narrowest inputs.
PRESETS = {
    "default": {},
    "full": dict(degree=9150, num_points=1000, coeff_radius=2e-15, point_radius=1e-15),
    "tight": dict(degree=9150, num_points=1000, coeff_radius=0.0, point_radius=0.0),
}


def config_from_preset(name: str, **overrides) -> BenchConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r} (expected one of: {', '.join(PRESETS)})")
    values = dict(PRESETS[name])
    values.update({k: v for k, v in overrides.items() if v is not None})
    return BenchConfig(**values)
