"""Periodic zeta function zeta(s; x) = sum_{n>=1} e^{2 pi i n x} n^{-s} and Riemann zeta.

Twists only matter mod 1 and are reduced before anything else happens.  At an
integer twist the function is the Riemann zeta function; at s = 1 and a
non-integer twist it is -log(1 - e^{2 pi i x}) on the principal branch.
"""

from __future__ import annotations

import functools
import math
from dataclasses import InitVar, dataclass, field
from fractions import Fraction
from numbers import Number

import numpy as np

from .errors import DomainError
from .series import DEFAULT_CONFIG, EPS, SummationConfig, ValueWithError, sum_single

Twist = float | Fraction

EM_CUTOFF = 50
# Bernoulli numbers B_2, B_4, B_6
_BERNOULLI = {2: Fraction(1, 6), 4: Fraction(-1, 30), 6: Fraction(1, 42)}
MAX_SINGLE_CUTOFF = 1 << 22
TWIST_RESOLUTION = 64  # oscillation periods needed inside the taper


def reduce_twist(x) -> Twist:
    """Representative of x mod 1 in [0, 1); rationals stay exact."""
    if isinstance(x, Fraction) or isinstance(x, int):
        x = Fraction(x)
        return x - math.floor(x)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"twist must be finite, got {x!r}")
    r = x % 1.0
    return 0.0 if r >= 1.0 else r


def twist_distance(x) -> float:
    """Distance from x to the nearest integer."""
    r = float(reduce_twist(x))
    return min(r, 1.0 - r)


def is_integer_twist(x, eps: float = DEFAULT_CONFIG.twist_integer_eps) -> bool:
    return twist_distance(x) < eps


def as_exponent(s) -> complex | int | float:
    """Normalise an exponent: integral reals become int, other reals float."""
    if isinstance(s, bool) or not isinstance(s, Number):
        raise TypeError(f"exponent must be a number, got {type(s).__name__}")
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"exponent must be finite, got {s!r}")
    if z.imag == 0:
        return int(z.real) if z.real.is_integer() else z.real
    return z


def phases(x: Twist, n: np.ndarray) -> np.ndarray:
    """e^{2 pi i n x} for an integer array n, exact in the phase for rational x."""
    x = reduce_twist(x)
    if isinstance(x, Fraction):
        p, q = x.numerator, x.denominator
        if q == 1:
            return np.ones(len(n), dtype=complex)
        frac = (n.astype(np.int64) % q) * p % q / q
    else:
        frac = np.mod(n * x, 1.0)
    return np.exp(2j * np.pi * frac)


def powers(n: np.ndarray, s) -> np.ndarray:
    """n^{-s} elementwise."""
    s = as_exponent(s)
    if s == 0:
        return np.ones(len(n), dtype=float)
    base = n.astype(float)
    if isinstance(s, complex):
        return np.exp(-s * np.log(base))
    return base ** (-float(s))


@dataclass(frozen=True)
class PeriodicZetaArgs:
    """Exponent s and twist x of zeta(s; x); x is stored reduced to [0, 1)."""

    s: complex | int | float
    x: Twist
    twist_integer_eps: InitVar[float] = DEFAULT_CONFIG.twist_integer_eps
    integer_twist: bool = field(init=False)

    def __post_init__(self, twist_integer_eps):
        object.__setattr__(self, "s", as_exponent(self.s))
        x = reduce_twist(self.x)
        integer = twist_distance(x) < twist_integer_eps
        object.__setattr__(self, "x", Fraction(0) if integer and isinstance(x, Fraction) else (0.0 if integer else x))
        object.__setattr__(self, "integer_twist", integer)


def riemann_zeta(s) -> ValueWithError:
    """Riemann zeta for Re(s) > 1 by Euler-Maclaurin with 50 direct terms.

    The error estimate is the first omitted correction (the B_6 term), scaled
    by |s + 5| / (Re(s) + 5) to cover complex s.
    """
    s = as_exponent(s)
    sc = complex(s)
    if sc.real <= 1:
        raise DomainError(f"riemann_zeta needs Re(s) > 1, got s = {s}")
    N = EM_CUTOFF
    n = np.arange(1, N, dtype=float)
    head = complex(np.sum(np.exp(-sc * np.log(n)))) if isinstance(s, complex) else float(np.sum(n ** -float(s)))
    total = head + N ** (1 - sc) / (sc - 1) + 0.5 * N ** (-sc)
    rising = sc
    for k in (2, 4):
        total += float(_BERNOULLI[k]) / math.factorial(k) * rising * N ** (-sc - k + 1)
        rising *= (sc + k - 1) * (sc + k)
    omitted = abs(float(_BERNOULLI[6]) / math.factorial(6) * rising * N ** (-sc - 5))
    err = omitted * abs(sc + 5) / (sc.real + 5) + 8 * EPS * abs(total)
    return ValueWithError(total, err, N)


def _log_closed_form(x: Twist) -> ValueWithError:
    # 1 - e^{2 pi i x} = 2 sin(pi x) e^{i (pi x - pi/2)} with sin(pi x) > 0 on (0, 1)
    xf = float(x)
    value = complex(-math.log(2.0 * math.sin(math.pi * xf)), math.pi / 2 - math.pi * xf)
    return ValueWithError(value, 8 * EPS * max(1.0, abs(value)), 0)


def single_cutoff(x: Twist, cfg: SummationConfig) -> int:
    d = twist_distance(x)
    need = math.ceil(TWIST_RESOLUTION / d) if d > 0 else cfg.max_diagonal
    return min(max(cfg.max_diagonal, need), MAX_SINGLE_CUTOFF)


@functools.lru_cache(maxsize=4096)
def _periodic_zeta(args: PeriodicZetaArgs, cfg: SummationConfig) -> ValueWithError:
    s, x = args.s, args.x
    sc = complex(s)
    if args.integer_twist:
        if sc.real <= 1:
            raise DomainError(f"zeta({s}; {x}) diverges: integer twist needs Re(s) > 1")
        return riemann_zeta(s)
    if s == 1:
        return _log_closed_form(x)
    if sc.real <= 0:
        raise DomainError(f"zeta({s}; {x}) is outside the convergence region Re(s) > 0")
    run = cfg.with_cutoff(single_cutoff(x, cfg))
    n = np.arange(1, run.max_diagonal + 1)
    terms = phases(x, n) * powers(n, s)
    return sum_single(lambda _: terms, run)


def periodic_zeta(s, x, cfg: SummationConfig | None = None) -> ValueWithError:
    """zeta(s; x) with twist x taken mod 1.

    Integer twists need Re(s) > 1 (Riemann zeta); other twists need Re(s) > 0.
    Raises DomainError outside those regions.
    """
    cfg = cfg or DEFAULT_CONFIG
    args = s if isinstance(s, PeriodicZetaArgs) else PeriodicZetaArgs(s, x, cfg.twist_integer_eps)
    return _periodic_zeta(args, cfg)

