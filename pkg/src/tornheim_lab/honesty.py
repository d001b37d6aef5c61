"""Twenty series with known sums, used to audit the engine's error estimates.

A series counts as honest when |estimate - truth| <= 10 * reported abs_err.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import TornheimError
from .series import DEFAULT_CONFIG, SummationConfig, sum_double_diagonal, sum_single

CATALAN = 0.915965594177219015054603514932
ZETA3 = 1.202056903159594285399738161511
ZETA_3_2 = 2.612375348685488343348567567924
ETA_1_2 = 0.604898643421630370247265914236
PI = math.pi


def _twisted(x):
    return lambda n: np.exp(2j * PI * np.mod(n * x, 1.0))


def _alt(n):
    return np.where(n % 2 == 1, 1.0, -1.0)


@dataclass(frozen=True)
class KnownSeries:
    name: str
    kind: str  # "single" or "double"
    term: Callable
    value: complex


SUITE = (
    KnownSeries("sum 1/n^2", "single", lambda n: 1.0 / n.astype(float) ** 2, PI ** 2 / 6),
    KnownSeries("sum 1/n^3", "single", lambda n: 1.0 / n.astype(float) ** 3, ZETA3),
    KnownSeries("sum 1/n^4", "single", lambda n: 1.0 / n.astype(float) ** 4, PI ** 4 / 90),
    KnownSeries("sum 1/n^1.5", "single", lambda n: n.astype(float) ** -1.5, ZETA_3_2),
    KnownSeries("sum 1/(n(n+1))", "single", lambda n: 1.0 / (n * (n + 1.0)), 1.0),
    KnownSeries("sum 2^-n", "single", lambda n: 0.5 ** n.astype(float), 1.0),
    KnownSeries("alternating 1/n", "single", lambda n: _alt(n) / n, math.log(2)),
    KnownSeries("alternating 1/n^2", "single", lambda n: _alt(n) / n.astype(float) ** 2, PI ** 2 / 12),
    KnownSeries("alternating 1/sqrt(n)", "single", lambda n: _alt(n) / np.sqrt(n), ETA_1_2),
    KnownSeries("Leibniz 1/(2n-1)", "single", lambda n: _alt(n) / (2.0 * n - 1), PI / 4),
    KnownSeries("e(n/3)/n", "single", lambda n: _twisted(1 / 3)(n) / n,
                -cmath.log(1 - cmath.exp(2j * PI / 3))),
    KnownSeries("e(0.3 n)/n", "single", lambda n: _twisted(0.3)(n) / n, -cmath.log(1 - cmath.exp(0.6j * PI))),
    KnownSeries("e(n/4)/n^2", "single", lambda n: _twisted(0.25)(n) / n.astype(float) ** 2,
                complex(-PI ** 2 / 48, CATALAN)),
    KnownSeries("cos(n)/n", "single", lambda n: np.cos(n) / n, -math.log(2 * math.sin(0.5))),
    KnownSeries("sin(n)/n", "single", lambda n: np.sin(n) / n, (PI - 1) / 2),
    KnownSeries("1/(mn(m+n))", "double", lambda m, n: 1.0 / (m * n * (m + n.astype(float))), 2 * ZETA3),
    KnownSeries("1/(m^2 n^2)", "double", lambda m, n: 1.0 / (m.astype(float) * n) ** 2, (PI ** 2 / 6) ** 2),
    KnownSeries("1/(m+n)^3", "double", lambda m, n: 1.0 / (m + n.astype(float)) ** 3, PI ** 2 / 6 - ZETA3),
    KnownSeries("1/(n(m+n)^2)", "double", lambda m, n: 1.0 / (n * (m + n.astype(float)) ** 2), ZETA3),
    KnownSeries("(-1)^(m+n)/(m+n)^2", "double", lambda m, n: _alt(m + n + 1) / (m + n.astype(float)) ** 2,
                PI ** 2 / 12 - math.log(2)),
)


@dataclass(frozen=True)
class HonestyResult:
    name: str
    estimate: complex
    reported: float
    true_error: float

    @property
    def converged(self) -> bool:
        return math.isfinite(self.reported)

    @property
    def honest(self) -> bool:
        return self.converged and self.true_error <= 10 * self.reported


def run_honesty(cfg: SummationConfig = DEFAULT_CONFIG) -> list[HonestyResult]:
    out = []
    for s in SUITE:
        try:
            v = (sum_single if s.kind == "single" else sum_double_diagonal)(s.term, cfg)
        except TornheimError as exc:
            est = getattr(exc, "estimate", None)
            out.append(HonestyResult(s.name, complex("nan") if est is None else est, float("inf"), float("inf")))
            continue
        out.append(HonestyResult(s.name, v.value, v.abs_err, abs(v.value - s.value)))
    return out
