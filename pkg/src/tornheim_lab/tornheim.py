"""Lerch-type Tornheim double zeta function and the closed forms built from it.

    T(s, t, u; x, y) = lim_R sum_{m + n <= R} e^{2 pi i m x} e^{2 pi i n y} / (m^s n^t (m+n)^u)

The diagonal sums are formed by FFT convolution of the two single-index
sequences and passed to the series engine.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import DEFAULT_CONFIG, SummationConfig, ValueWithError, sum_separable_diagonal
from .zeta import as_exponent, periodic_zeta, phases, powers, reduce_twist, twist_distance

DELTA_MIN = 1e-3
MAX_INDEX_SUM = 60
MAX_DOUBLE_CUTOFF = 1 << 20
TWIST_RESOLUTION = 64


@dataclass(frozen=True)
class TornheimParams:
    """Exponents (s, t, u) and twists (x, y); twists are stored reduced mod 1."""

    s: complex | int | float
    t: complex | int | float
    u: complex | int | float
    x: float
    y: float

    def __post_init__(self):
        for name in ("s", "t", "u"):
            object.__setattr__(self, name, as_exponent(getattr(self, name)))
        object.__setattr__(self, "x", reduce_twist(self.x))
        object.__setattr__(self, "y", reduce_twist(self.y))


class Convergence(str, enum.Enum):
    ABSOLUTE = "absolute"
    CONDITIONAL = "conditional"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: Convergence
    reason: str

    @property
    def evaluable(self) -> bool:
        return self.kind is not Convergence.UNSUPPORTED


def convergence_class(p: TornheimParams, eps: float = DEFAULT_CONFIG.twist_integer_eps) -> ConvergenceClass:
    """Classify the diagonal-order double series for p.

    Three directions can diverge: m -> oo with n fixed (exponent s+u, twist x),
    n -> oo with m fixed (exponent t+u, twist y) and the bulk m ~ n (exponent
    s+t+u).  Each is fine if its exponent clears the absolute threshold, or if
    a non-integer twist makes it oscillate with a decaying envelope.  The bulk
    only matters when x - y is an integer; otherwise its contribution sits in
    the two edge directions.
    """
    s, t, u = (complex(v).real for v in (p.s, p.t, p.u))
    xi = twist_distance(p.x) < eps
    yi = twist_distance(p.y) < eps
    di = twist_distance(float(p.x) - float(p.y)) < eps
    sm, sn, st = s + u, t + u, s + t + u
    if s + t > 1 and sn > 1 and st > 2 and sm > 1:
        return ConvergenceClass(Convergence.ABSOLUTE, "all exponent conditions hold")
    problems, damped = [], []
    if not sm > 1:
        (damped if (not xi and sm > 0) else problems).append(f"m-direction (Re(s+u) = {sm:g})")
    if not sn > 1:
        (damped if (not yi and sn > 0) else problems).append(f"n-direction (Re(t+u) = {sn:g})")
    if not st > 2:
        if not di:
            damped.append("bulk (x - y non-integer)")
        elif not yi and st > 1:
            damped.append(f"bulk (Re(s+t+u) = {st:g}, twist y oscillates)")
        else:
            problems.append(f"bulk (Re(s+t+u) = {st:g}, x - y integer)")
    if problems:
        return ConvergenceClass(Convergence.UNSUPPORTED, "divergent " + "; ".join(problems))
    reason = "damped by oscillation: " + "; ".join(damped) if damped else "convergent without absolute-class guarantee"
    return ConvergenceClass(Convergence.CONDITIONAL, reason)


def double_cutoff(twists, cfg: SummationConfig) -> int:
    """Cutoff giving every non-integer twist frequency enough periods in the taper."""
    dists = [twist_distance(w) for w in twists]
    dists = [d for d in dists if d >= cfg.twist_integer_eps]
    need = math.ceil(TWIST_RESOLUTION / min(dists)) if dists else cfg.max_diagonal
    return min(max(cfg.max_diagonal, need), MAX_DOUBLE_CUTOFF)


@functools.lru_cache(maxsize=8192)
def _tornheim(p: TornheimParams, cfg: SummationConfig) -> ValueWithError:
    cls = convergence_class(p, cfg.twist_integer_eps)
    if not cls.evaluable:
        raise DomainError(f"T({p.s}, {p.t}, {p.u}; {p.x}, {p.y}) is not evaluable: {cls.reason}")
    run = cfg.with_cutoff(double_cutoff((p.x, p.y, float(p.x) - float(p.y)), cfg))
    n = np.arange(1, run.max_diagonal + 1)
    first = phases(p.x, n) * powers(n, p.s)
    second = phases(p.y, n) * powers(n, p.t)
    return sum_separable_diagonal(first, second, powers(n, p.u), run)


def tornheim_T(p: TornheimParams, cfg: SummationConfig | None = None) -> ValueWithError:
    """T(s, t, u; x, y) by diagonal summation; DomainError if unsupported."""
    return _tornheim(p, cfg or DEFAULT_CONFIG)


def T(s, t, u, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    return tornheim_T(TornheimParams(s, t, u, x, y), cfg)


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"binom({n}, {k}) needs non-negative arguments")
    return math.comb(n, k)


def binomial_reduction_holds(a: int, b: int) -> bool:
    """sum_{j=1}^{a} C(a+b-j-1, a-j) == C(a+b-1, b) in exact integers."""
    return sum(binom(a + b - j - 1, a - j) for j in range(1, a + 1)) == binom(a + b - 1, b)


def _check_indices(a, b):
    if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
        raise DomainError(f"indices must be positive integers, got a={a!r}, b={b!r}")
    if a + b > MAX_INDEX_SUM:
        raise DomainError(f"a + b = {a + b} exceeds {MAX_INDEX_SUM}")


def check_theorem_twists(x, y):
    """Reduce x, y mod 1 and require 0 < x != y < 1 with |x - y| >= DELTA_MIN mod 1."""
    x, y = reduce_twist(x), reduce_twist(y)
    if twist_distance(x) == 0 or twist_distance(y) == 0:
        raise DomainError(f"twists must be non-integer, got x={x}, y={y}")
    if twist_distance(float(x) - float(y)) < DELTA_MIN:
        raise DomainError(f"|x - y| must be at least {DELTA_MIN} mod 1, got x={x}, y={y}")
    return x, y


def rhs_theorem1(a: int, b: int, s, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    """Binomial-weighted products of periodic zeta values, assembled term by term."""
    cfg = cfg or DEFAULT_CONFIG
    _check_indices(a, b)
    x, y = check_theorem_twists(x, y)
    s = as_exponent(s)

    def z(e, w):
        return periodic_zeta(e, w, cfg)

    total = ValueWithError(0.0)
    for j in range(1, a + 1):
        pair = z(j, x - y) + z(j, y - x).scale((-1) ** j)
        total = total + (z(a + b + s - j, y) * pair).scale(binom(a + b - j - 1, a - j))
    for j in range(1, b + 1):
        pair = z(j, y - x) + z(j, x - y).scale((-1) ** j)
        total = total + (z(a + b + s - j, x) * pair).scale(binom(a + b - j - 1, b - j))
    total = total - z(a + b + s, y).scale(binom(a + b - 1, a))
    total = total - z(a + b + s, x).scale(binom(a + b - 1, b))
    return total


def K_closed_form(a: int, b: int, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    return rhs_theorem1(a, b, 0, x, y, cfg)


def lhs_theorem1(a: int, b: int, s, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    """T(a,b,s; x,y) + (-1)^b T(b,s,a; x-y,x) + (-1)^a T(s,a,b; y,y-x)."""
    _check_indices(a, b)
    x, y = reduce_twist(x), reduce_twist(y)
    return (T(a, b, s, x, y, cfg)
            + T(b, s, a, x - y, x, cfg).scale((-1) ** b)
            + T(s, a, b, y, y - x, cfg).scale((-1) ** a))


def U_value(a: int, b: int, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    """U with 2U = T(0,a,b; x,y) - (-1)^{a+b} T(0,a,b; -x,-y)."""
    _check_indices(a, b)
    plus = T(0, a, b, x, y, cfg)
    minus = T(0, a, b, -x, -y, cfg)
    return (plus - minus.scale((-1) ** (a + b))).scale(0.5)


def stuffle_rhs(s1, s2, X, Y, cfg: SummationConfig | None = None) -> ValueWithError:
    """Split of zeta(s1; X) zeta(s2; Y) over p > q, q > p and p = q.

    p > q gives T(0, s2, s1; X, X+Y), q > p gives T(0, s1, s2; Y, X+Y), the
    diagonal gives zeta(s1 + s2; X + Y).
    """
    cfg = cfg or DEFAULT_CONFIG
    X, Y = reduce_twist(X), reduce_twist(Y)
    return (T(0, s2, s1, X, X + Y, cfg)
            + T(0, s1, s2, Y, X + Y, cfg)
            + periodic_zeta(complex(as_exponent(s1)) + complex(as_exponent(s2)), X + Y, cfg))
