"""Summation of single and double complex series in a prescribed order.

A single series is summed over n <= R, a double series over the diagonals
m + n <= R with R ascending.  Limits are estimated from a ladder of cutoffs
R_0 < R_1 < ... < R_max spaced by a constant ratio.  At each cutoff the partial
sum is replaced by a smoothly tapered partial sum

    M(L) = sum_{N <= L} c_N w(N / L),

with w a C-infinity step falling from 1 at 0 to 0 at 1.  Tapering is a regular
summation method (it reproduces the limit of every convergent sequence) and it
removes oscillatory tails e^{2 pi i N theta} A(N) faster than any power of L.
What remains is a non-oscillatory drift of power/log type, which the sequence
transformation (Wynn epsilon by default) removes across the ladder.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.signal import fftconvolve

from .errors import InsufficientTerms, NonConvergent

log = logging.getLogger(__name__)

EPS = float(np.finfo(float).eps)
NONCONVERGENCE_GAP = 1e-4


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class ValueWithError:
    """A complex value with an absolute error estimate.

    Arithmetic propagates the estimate: sums add errors, products use
    |a| e_b + |b| e_a + e_a e_b.  Plain numbers are treated as exact.
    ``terms`` counts the series terms spent producing the value.
    """

    value: complex
    abs_err: float = 0.0
    terms: int = 0

    def __post_init__(self):
        v = complex(self.value)
        err = float(self.abs_err)
        if not _finite(v):
            raise ValueError(f"non-finite value {v!r}")
        if not (err >= 0.0 and math.isfinite(err)):
            raise ValueError(f"error bound must be finite and non-negative, got {err!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "abs_err", err)
        object.__setattr__(self, "terms", int(self.terms))

    @staticmethod
    def _lift(other) -> "ValueWithError":
        if isinstance(other, ValueWithError):
            return other
        return ValueWithError(complex(other), 0.0)

    def __add__(self, other):
        o = self._lift(other)
        return ValueWithError(self.value + o.value, self.abs_err + o.abs_err, self.terms + o.terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return ValueWithError(self.value - o.value, self.abs_err + o.abs_err, self.terms + o.terms)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return ValueWithError(-self.value, self.abs_err, self.terms)

    def __mul__(self, other):
        o = self._lift(other)
        err = abs(self.value) * o.abs_err + abs(o.value) * self.abs_err + self.abs_err * o.abs_err
        return ValueWithError(self.value * o.value, err, self.terms + o.terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.value == 0:
            raise ZeroDivisionError("division by an exact zero")
        margin = abs(o.value) - o.abs_err
        if margin <= 0:
            raise ArithmeticError("divisor is not bounded away from zero")
        q = self.value / o.value
        err = (self.abs_err + abs(q) * o.abs_err) / margin
        return ValueWithError(q, err, self.terms + o.terms)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def scale(self, c) -> "ValueWithError":
        c = complex(c)
        return ValueWithError(self.value * c, abs(c) * self.abs_err, self.terms)

    def conjugate(self) -> "ValueWithError":
        return ValueWithError(self.value.conjugate(), self.abs_err, self.terms)

    def __complex__(self):
        return self.value

    def __abs__(self):
        return abs(self.value)


class Accel(str, enum.Enum):
    NONE = "none"
    AITKEN = "aitken"
    LEVIN_U = "levin_u"
    EPSILON = "epsilon"


@dataclass(frozen=True)
class SummationConfig:
    """Cutoffs, acceleration method and tolerances for every series evaluation."""

    max_diagonal: int = 4000
    min_diagonal: int = 64
    accel: Accel = Accel.EPSILON
    levin_order: int = 10
    target_abs_tol: float = 1e-9
    twist_integer_eps: float = 1e-12
    smooth: bool = True
    ladder_ratio: float = math.sqrt(2.0)

    def __post_init__(self):
        object.__setattr__(self, "accel", Accel(self.accel))
        if not (0 < self.min_diagonal < self.max_diagonal):
            raise ValueError("need 0 < min_diagonal < max_diagonal")
        if self.levin_order < 1:
            raise ValueError("levin_order must be positive")
        if not (self.target_abs_tol > 0 and self.twist_integer_eps > 0):
            raise ValueError("tolerances must be strictly positive")
        if not self.ladder_ratio > 1:
            raise ValueError("ladder_ratio must exceed 1")

    def with_cutoff(self, max_diagonal: int) -> "SummationConfig":
        from dataclasses import replace

        return replace(self, max_diagonal=max(int(max_diagonal), self.min_diagonal + 1))


DEFAULT_CONFIG = SummationConfig()


@dataclass(frozen=True)
class PartialSumSequence:
    """Partial sums ``sums[i]`` taken at cutoffs ``indices[i]``."""

    sums: np.ndarray
    indices: np.ndarray = field(default=None)
    last_term_magnitude: float = 0.0

    def __post_init__(self):
        sums = np.asarray(self.sums, dtype=complex)
        object.__setattr__(self, "sums", sums)
        if self.indices is None:
            idx = np.arange(1, len(sums) + 1, dtype=float)
        else:
            idx = np.asarray(self.indices, dtype=float)
            if idx.shape != sums.shape:
                raise ValueError("indices and sums differ in length")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_terms(cls, terms: Sequence[complex]) -> "PartialSumSequence":
        terms = np.asarray(terms, dtype=complex)
        last = float(abs(terms[-1])) if len(terms) else 0.0
        return cls(np.cumsum(terms), np.arange(1, len(terms) + 1), last)

    def __len__(self):
        return len(self.sums)

    def head(self, n: int) -> "PartialSumSequence":
        return PartialSumSequence(self.sums[:n], self.indices[:n], self.last_term_magnitude)


# -- sequence transformations -------------------------------------------------


def _levin_u(s: np.ndarray, idx: np.ndarray, k: int) -> complex:
    """Levin u-transform of order k from the last k+2 partial sums."""
    tail = s[-(k + 2):]
    n = idx[-(k + 1):]
    a = np.diff(tail)
    omega = n * a
    if np.any(omega == 0):
        raise ZeroDivisionError
    j = np.arange(k + 1)
    coef = np.array([(-1) ** int(i) * math.comb(k, int(i)) for i in j], dtype=float)
    coef *= (n / n[-1]) ** (k - 1)
    return complex(np.sum(coef * tail[1:] / omega) / np.sum(coef / omega))


def _aitken_columns(s: np.ndarray) -> list[complex]:
    cols = [complex(s[-1])]
    cur = np.array(s, dtype=complex)
    while len(cur) >= 3:
        d1 = cur[1:] - cur[:-1]
        d2 = d1[1:] - d1[:-1]
        nxt = cur[2:].copy()
        ok = d2 != 0
        nxt[ok] = cur[2:][ok] - d1[1:][ok] ** 2 / d2[ok]
        cur = nxt
        cols.append(complex(cur[-1]))
    return cols


def _epsilon_columns(s: np.ndarray) -> tuple[list[complex], float | None]:
    """Even columns of Wynn's epsilon table, each read at its newest entry.

    The table stops early when the next differences vanish, meaning the
    current column already reproduces the sequence exactly.  In that case the
    second value is the spread of that column's last two entries, a better
    error gauge than the distance to the column below; otherwise it is None.
    """
    scale = max(float(np.max(np.abs(s))), 1e-300)
    prev = np.zeros(len(s) + 1, dtype=complex)
    cur = np.array(s, dtype=complex)
    cols = [complex(cur[-1])]
    k = 0
    while len(cur) >= 2:
        d = cur[1:] - cur[:-1]
        if np.any(np.abs(d) <= 4 * EPS * scale):
            if k % 2 == 0 and k > 0 and len(cur) >= 2:
                return cols, float(abs(cur[-1] - cur[-2]))
            break
        nxt = prev[1:len(cur)] + 1.0 / d
        prev, cur = cur, nxt
        k += 1
        if k % 2 == 0:
            if not _finite(complex(cur[-1])):
                break
            cols.append(complex(cur[-1]))
    return cols, None


def accelerate(seq: PartialSumSequence, method: Accel | str = Accel.LEVIN_U, order: int = 10) -> ValueWithError:
    """Estimate the limit of ``seq``; abs_err is the gap between the two top columns."""
    method = Accel(method)
    n = len(seq)
    if n < order + 2:
        raise InsufficientTerms(f"{method.value} of order {order} needs {order + 2} partial sums, got {n}")
    s = seq.sums
    last = complex(s[-1])
    if np.all(s[-(order + 2):] == last):
        return ValueWithError(last, 0.0)
    if method is Accel.NONE:
        return ValueWithError(last, abs(last - complex(s[-2])))
    if method is Accel.LEVIN_U:
        try:
            top = _levin_u(s, seq.indices, order)
            below = _levin_u(s, seq.indices, order - 1) if order > 1 else complex(s[-1])
        except ZeroDivisionError:
            spread = float(np.max(np.abs(s[-(order + 2):] - last)))
            return ValueWithError(last, spread)
        if not (_finite(top) and _finite(below)):
            raise NonConvergent("Levin transform produced a non-finite value")
        return ValueWithError(top, abs(top - below))
    if method is Accel.EPSILON:
        cols, settled = _epsilon_columns(s[-(2 * order + 1):])
        if settled is not None:
            return ValueWithError(cols[-1], settled)
    else:
        cols = _aitken_columns(s[-(order + 2):])
    if len(cols) == 1:
        return ValueWithError(cols[0], abs(cols[0] - complex(s[-2])))
    return ValueWithError(cols[-1], abs(cols[-1] - cols[-2]))


# -- tapered ladders ----------------------------------------------------------


def taper(t: np.ndarray) -> np.ndarray:
    """C-infinity step: 1 at t <= 0, 0 at t >= 1."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    out = np.zeros_like(t)
    inner = (t > 0) & (t < 1)
    ti = t[inner]
    # exp(-1/(1-t)) / (exp(-1/(1-t)) + exp(-1/t)); the exponent is capped, exp(700) already gives 0
    out[inner] = 1.0 / (1.0 + np.exp(np.minimum(1.0 / (1.0 - ti) - 1.0 / ti, 700.0)))
    out[t <= 0] = 1.0
    return out


def ladder(max_cutoff: int, cfg: SummationConfig) -> list[float]:
    """Cutoffs max_cutoff * ratio^-k down to min_diagonal, ascending.

    The cutoffs are left unrounded so the tapered sums vary smoothly along
    the ladder; rounding would add jitter that no extrapolation can model.
    """
    cuts = []
    L = float(max_cutoff)
    while L >= cfg.min_diagonal:
        cuts.append(L)
        L /= cfg.ladder_ratio
    return cuts[::-1]


def _ladder_values(c: np.ndarray, cuts: list[float], smooth: bool) -> np.ndarray:
    if not smooth:
        partial = np.cumsum(c)
        return np.array([partial[int(L) - 1] for L in cuts])
    out = np.empty(len(cuts), dtype=complex)
    for i, L in enumerate(cuts):
        top = min(int(L), len(c))
        N = np.arange(1, top + 1, dtype=float)
        out[i] = np.sum(c[:top] * taper(N / L))
    return out


def _exact_sum(c: np.ndarray) -> complex:
    return complex(math.fsum(c.real), math.fsum(c.imag))


def limit_of_terms(c: np.ndarray, cfg: SummationConfig = DEFAULT_CONFIG, terms_used: int | None = None) -> ValueWithError:
    """Limit of sum_N c[N-1], where c[N-1] is the total contribution of cutoff N.

    Raises NonConvergent when the estimated error exceeds 1e-4.
    """
    c = np.asarray(c, dtype=complex)
    R = len(c)
    used = R if terms_used is None else terms_used
    if not np.all(np.isfinite(c)):
        raise NonConvergent("series terms are not finite")
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return ValueWithError(0.0, 0.0, used)
    if nz[-1] + 1 <= R // 2:
        # finitely supported: the limit is the finite sum itself
        return ValueWithError(_exact_sum(c), 0.0, used)

    cuts = ladder(R, cfg)
    if len(cuts) < 3:
        raise InsufficientTerms(f"cutoff {R} leaves only {len(cuts)} ladder points")
    M = _ladder_values(c, cuts, cfg.smooth)
    floor = 16 * EPS * (math.sqrt(R) * float(np.sum(np.abs(c))) + abs(M[-1]))
    # drift shrinking at least like L^(-1/2) leaves a remainder within this factor of the last step
    gap_factor = 1.0 / (1.0 - cfg.ladder_ratio ** -0.5)
    top_gap = abs(complex(M[-1] - M[-2]))
    candidates = [(complex(M[-1]), gap_factor * top_gap)]

    if cfg.accel is not Accel.NONE and top_gap > floor:
        seq = PartialSumSequence(M)
        if cfg.accel is Accel.EPSILON:
            k = min(cfg.levin_order, (len(M) - 1) // 2)
        else:
            k = min(cfg.levin_order, len(M) - 2)
        try:
            est = accelerate(seq, cfg.accel, k)
            k2 = min(k, len(M) - 3) if cfg.accel is not Accel.EPSILON else min(k, (len(M) - 2) // 2)
            if k2 >= 1:
                prev = accelerate(seq.head(len(M) - 1), cfg.accel, k2)
                err = max(est.abs_err, abs(est.value - prev.value))
            else:
                err = est.abs_err
            candidates.append((est.value, err))
        except (InsufficientTerms, NonConvergent, ValueError) as exc:
            log.debug("acceleration failed: %s", exc)

    value, err = min(candidates, key=lambda ve: ve[1])
    err += floor
    if not _finite(value) or not math.isfinite(err) or err > NONCONVERGENCE_GAP:
        raise NonConvergent(
            f"limit not stabilised at cutoff {R}: estimate {value}, gap {err:.3g}",
            estimate=value,
            gap=err,
        )
    if err > 10 * cfg.target_abs_tol:
        log.info("series converged only to %.3g (target %.3g) at cutoff %d", err, cfg.target_abs_tol, R)
    return ValueWithError(value, err, used)


# -- public summation entry points --------------------------------------------


def _evaluate(fn: Callable, *args: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(fn(*args), dtype=complex)
    except (TypeError, ValueError):
        out = None
    if out is None or out.shape != args[0].shape:
        out = np.fromiter((complex(fn(*(int(a[i]) for a in args))) for i in range(len(args[0]))),
                          dtype=complex, count=len(args[0]))
    return out


def sum_single(term: Callable, cfg: SummationConfig = DEFAULT_CONFIG) -> ValueWithError:
    """Limit of sum_{n >= 1} term(n).

    ``term`` is called with an integer ndarray; scalar-only callables are
    evaluated element by element.
    """
    n = np.arange(1, cfg.max_diagonal + 1)
    return limit_of_terms(_evaluate(term, n), cfg)


def sum_double_diagonal(term: Callable, cfg: SummationConfig = DEFAULT_CONFIG) -> ValueWithError:
    """Limit over R of sum_{m + n <= R} term(m, n), diagonals taken in order."""
    R = cfg.max_diagonal
    c = np.zeros(R, dtype=complex)
    for N in range(2, R + 1):
        m = np.arange(1, N)
        vals = _evaluate(term, m, N - m)
        c[N - 1] = _exact_sum(vals) if N <= 64 else vals.sum()
    return limit_of_terms(c, cfg, R * (R - 1) // 2)


def diagonal_convolution(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """d[N-1] = sum_{m + n = N} first[m-1] * second[n-1] for N = 1..len(first)."""
    R = len(first)
    d = np.zeros(R, dtype=complex)
    if R < 2:
        return d
    conv = fftconvolve(np.asarray(first, dtype=complex), np.asarray(second, dtype=complex))
    d[1:] = conv[: R - 1]
    return d


def sum_separable_diagonal(first: np.ndarray, second: np.ndarray, joint: np.ndarray,
                           cfg: SummationConfig = DEFAULT_CONFIG) -> ValueWithError:
    """Diagonal-order limit of sum_{m,n} first[m-1] second[n-1] joint[m+n-1].

    The arrays share the length R = cutoff; diagonal sums are formed by FFT
    convolution in O(R log R).
    """
    R = len(first)
    if not (len(second) == R == len(joint)):
        raise ValueError("first, second and joint must share one length")
    c = diagonal_convolution(first, second) * np.asarray(joint, dtype=complex)
    return limit_of_terms(c, cfg, R * (R - 1) // 2)
