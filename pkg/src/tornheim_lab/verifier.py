"""Two-sided numerical checks of the functional relations, and grid suites.

Each check computes a left side and a right side along separate code paths
(they share only periodic_zeta and the series engine) and reports

    residual = |lhs - rhs|,  budget = lhs.abs_err + rhs.abs_err,
    pass     = residual <= max(tol, 10 * budget).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .dirichlet import DirichletCharacter, char_inversion_sides, characters_mod, double_L, gauss_sum, parse_character_ref
from .errors import DomainError, NotPrimitive, ParityViolation, TornheimError
from .series import DEFAULT_CONFIG, SummationConfig, ValueWithError
from .tornheim import (T, U_value, check_theorem_twists, K_closed_form, lhs_theorem1, rhs_theorem1,
                       stuffle_rhs)
from .zeta import as_exponent, periodic_zeta, reduce_twist

DEFAULT_TOL = {
    "theorem1": 1e-6,
    "prop1": 1e-6,
    "prop2": 1e-5,
    "stuffle": 1e-6,
    "recursion": 1e-6,
    "limit_xy": 0.0,
    "char_inversion": 1e-10,
}
ORIENTATIONS = ("as_printed", "swapped", "product_swapped")
BASE_ORIENTATIONS = ("as_printed", "swapped")


# -- serialisation helpers ------------------------------------------------------


def sig10(v: float) -> float:
    """Round to 10 significant digits."""
    return float(f"{v:.10g}")


def format_number(v) -> str:
    """Fixed, locale-independent text with 10 significant digits."""
    z = complex(v)
    if z.imag == 0:
        return f"{z.real:.10g}"
    if z.real == 0:
        return f"{z.imag:.10g}i"
    return f"{z.real:.10g}{z.imag:+.10g}i"


def serialize_param(v):
    if isinstance(v, DirichletCharacter):
        return v.ref
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [serialize_param(w) for w in v]
    z = complex(v)
    return sig10(z.real) if z.imag == 0 else format_number(z)


def _sort_key(v):
    if isinstance(v, DirichletCharacter):
        return (1, v.modulus, v.index)
    if isinstance(v, str):
        return (2, v)
    if isinstance(v, (list, tuple)):
        return (3, tuple(_sort_key(w) for w in v))
    z = complex(v)
    return (0, z.real, z.imag)


def _side(v: ValueWithError | None):
    if v is None:
        return None
    return {"re": sig10(v.value.real), "im": sig10(v.value.imag), "abs_err": sig10(v.abs_err)}


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    A point whose preconditions fail is kept as a skipped report: both sides
    are None and ``error`` holds the reason.
    """

    identity: str
    params: dict
    lhs: ValueWithError | None
    rhs: ValueWithError | None
    residual: float
    budget: float
    tol: float
    passed: bool
    terms_used: int
    orientation: str | None = None
    error: str | None = None
    detail: dict | None = None

    @property
    def skipped(self) -> bool:
        return self.lhs is None and self.error is not None

    @property
    def status(self) -> str:
        return "skipped" if self.skipped else ("pass" if self.passed else "fail")

    @property
    def sort_key(self):
        return (self.identity, tuple(_sort_key(v) for v in self.params.values()), self.orientation or "")

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: serialize_param(v) for k, v in self.params.items()},
            "lhs": _side(self.lhs),
            "rhs": _side(self.rhs),
            "residual": sig10(self.residual),
            "budget": sig10(self.budget),
            "tol": sig10(self.tol),
            "pass": self.passed,
            "terms_used": self.terms_used,
            "orientation": self.orientation,
        }
        if self.error is not None:
            out["error"] = self.error
        if self.detail is not None:
            out["detail"] = {k: serialize_param(v) for k, v in self.detail.items()}
        return out

    def line(self) -> str:
        params = ", ".join(f"{k}={serialize_param(v)}" for k, v in self.params.items())
        name = self.identity
        if self.skipped:
            return f"SKIP {name}({params}): {self.error}"
        return (f"{self.status.upper():4s} {name}({params}) residual={format_number(self.residual)} "
                f"budget={format_number(self.budget)} tol={format_number(self.tol)}")


def passes(residual: float, budget: float, tol: float) -> bool:
    return residual <= max(tol, 10.0 * budget)


def make_report(identity: str, params: dict, lhs: ValueWithError, rhs: ValueWithError, tol: float,
                orientation: str | None = None, detail: dict | None = None) -> VerificationReport:
    residual = abs(lhs.value - rhs.value)
    budget = lhs.abs_err + rhs.abs_err
    return VerificationReport(identity, dict(params), lhs, rhs, residual, budget, tol,
                              passes(residual, budget, tol), lhs.terms + rhs.terms, orientation, None, detail)


def skipped_report(identity: str, params: dict, reason: str, tol: float,
                   orientation: str | None = None) -> VerificationReport:
    return VerificationReport(identity, dict(params), None, None, 0.0, 0.0, tol, False, 0, orientation, reason)


def _tol(name, tol):
    return DEFAULT_TOL[name] if tol is None else tol


def _positive_int(name, v):
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")


# -- individual identities ------------------------------------------------------


def verify_theorem1(a, b, s, x, y, cfg: SummationConfig | None = None, tol: float | None = None) -> VerificationReport:
    """The three-term combination of T values against its closed form in periodic zeta values."""
    if complex(as_exponent(s)).real < 0:
        raise DomainError(f"verification needs Re(s) >= 0, got s = {s}")
    check_theorem_twists(x, y)
    lhs = lhs_theorem1(a, b, s, x, y, cfg)
    rhs = rhs_theorem1(a, b, s, x, y, cfg)
    return make_report("theorem1", dict(a=a, b=b, s=s, x=x, y=y), lhs, rhs, _tol("theorem1", tol))


def prop1_sides(a, b, x, y, orientation: str, cfg: SummationConfig | None = None):
    """Both sides of the alternating T(0, a, b) relation in one of three orientations.

    as_printed:      T(0,a,b; -y,x-y) - (-1)^{a+b} T(0,a,b; y,y-x)
                     = (-1)^b z(a;x) z(b;y) - (-1)^b K(a,b;x,y) + z(a;-y) z(b;x) - z(a+b;x-y)
    swapped:         first left term replaced by T(0,b,a; -y,x-y)
    product_swapped: z(a;-y) z(b;x) replaced by z(b;-y) z(a;x)
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    _positive_int("a", a)
    _positive_int("b", b)
    x, y = check_theorem_twists(x, y)
    sign_b = (-1) ** b
    first = T(0, b, a, -y, x - y, cfg) if orientation == "swapped" else T(0, a, b, -y, x - y, cfg)
    lhs = first - T(0, a, b, y, y - x, cfg).scale((-1) ** (a + b))

    def z(e, w):
        return periodic_zeta(e, w, cfg)

    cross = z(b, -y) * z(a, x) if orientation == "product_swapped" else z(a, -y) * z(b, x)
    rhs = ((z(a, x) * z(b, y)).scale(sign_b) - K_closed_form(a, b, x, y, cfg).scale(sign_b)
           + cross - z(a + b, x - y))
    return lhs, rhs


def verify_prop1(a, b, x, y, cfg: SummationConfig | None = None, orientation: str = "as_printed",
                 tol: float | None = None) -> VerificationReport:
    lhs, rhs = prop1_sides(a, b, x, y, orientation, cfg)
    return make_report("prop1_" + orientation, dict(a=a, b=b, x=x, y=y), lhs, rhs, _tol("prop1", tol), orientation)


def _check_prop2_characters(a, b, phi, chi, psi):
    _positive_int("a", a)
    _positive_int("b", b)
    for name, c in (("phi", phi), ("chi", chi), ("psi", psi)):
        if c.conductor == 1:
            raise NotPrimitive(f"{name} = {c.ref} has conductor 1; the j/l/r sums would be empty")
        if not c.is_primitive:
            raise NotPrimitive(f"{name} = {c.ref} has conductor {c.conductor} < modulus {c.modulus}")
    want = (-1) ** (a + b + 1)
    got = phi.parity * chi.parity * psi.parity
    if got != want:
        raise ParityViolation(f"phi chi psi(-1) = {got:+d} but (-1)^(a+b+1) = {want:+d}")


def prop2_rhs(a, b, phi, chi, psi, cfg: SummationConfig | None = None) -> ValueWithError:
    """sum over j, l, r of conj phi(j) conj chi(l) conj psi(r) U(a, b; j/h + r/q, l/k + r/q).

    Summands with a zero character coefficient are left out; any other
    summand that cannot be evaluated aborts the whole sum.
    """
    h, k, q = phi.modulus, chi.modulus, psi.modulus
    total = ValueWithError(0.0)
    for j, l, r in itertools.product(range(1, h), range(1, k), range(1, q)):
        coef = (phi(j) * chi(l) * psi(r)).conjugate()
        if coef == 0:
            continue
        X, Y = Fraction(j, h) + Fraction(r, q), Fraction(l, k) + Fraction(r, q)
        try:
            u = U_value(a, b, X, Y, cfg)
        except DomainError as exc:
            raise DomainError(f"summand (j, l, r) = ({j}, {l}, {r}) with twists ({reduce_twist(X)}, "
                              f"{reduce_twist(Y)}) is inadmissible: {exc}") from exc
        total = total + u.scale(coef)
    return total


def verify_prop2(a, b, phi, chi, psi, cfg: SummationConfig | None = None, tol: float | None = None) -> VerificationReport:
    """Gauss-sum weighted double L-value against a character sum of U values."""
    phi, chi, psi = (parse_character_ref(c) if isinstance(c, str) else c for c in (phi, chi, psi))
    _check_prop2_characters(a, b, phi, chi, psi)
    taus = gauss_sum(phi.conjugate()) * gauss_sum(chi.conjugate()) * gauss_sum(psi.conjugate())
    lhs = double_L(a, b, phi, chi, psi, cfg).scale(taus)
    rhs = prop2_rhs(a, b, phi, chi, psi, cfg)
    return make_report("prop2", dict(a=a, b=b, phi=phi, chi=chi, psi=psi), lhs, rhs, _tol("prop2", tol))


def verify_stuffle(s1, s2, X, Y, cfg: SummationConfig | None = None, tol: float | None = None) -> VerificationReport:
    lhs = periodic_zeta(s1, X, cfg) * periodic_zeta(s2, Y, cfg)
    rhs = stuffle_rhs(s1, s2, X, Y, cfg)
    return make_report("stuffle", dict(s1=s1, s2=s2, X=X, Y=Y), lhs, rhs, _tol("stuffle", tol))


def verify_recursion(a, b, s, x, y, cfg: SummationConfig | None = None, tol: float | None = None) -> VerificationReport:
    """T(a,b,s) against T(a-1,b,s+1) + T(a,b-1,s+1), from 1/(mn) = (1/m + 1/n)/(m+n)."""
    _positive_int("a", a)
    _positive_int("b", b)
    s1 = complex(as_exponent(s)) + 1
    lhs = T(a, b, s, x, y, cfg)
    rhs = T(a - 1, b, s1, x, y, cfg) + T(a, b - 1, s1, x, y, cfg)
    return make_report("recursion", dict(a=a, b=b, s=s, x=x, y=y), lhs, rhs, _tol("recursion", tol))


def limit_product(a, b, s, x, y, cfg: SummationConfig | None = None) -> ValueWithError:
    """(z(a+b+s-1; y) - z(a+b+s-1; x)) (z(1; x-y) - z(1; y-x))."""
    e = complex(as_exponent(s)) + a + b - 1
    diff = periodic_zeta(e, y, cfg) - periodic_zeta(e, x, cfg)
    return diff * (periodic_zeta(1, x - y, cfg) - periodic_zeta(1, y - x, cfg))


def verify_limit_xy(a, b, s, y, deltas, cfg: SummationConfig | None = None) -> list[float]:
    """|limit_product| at x = y + delta for each delta, in the given order."""
    _positive_int("a", a)
    _positive_int("b", b)
    if complex(as_exponent(s)).real + a + b - 1 <= 1:
        raise DomainError("need Re(a + b + s - 1) > 1")
    y = float(y)
    if not 0 < y < 1:
        raise DomainError(f"y must lie in (0, 1), got {y}")
    out = []
    for d in deltas:
        if not d > 0:
            raise DomainError(f"deltas must be positive, got {d}")
        if not y + d < 1:
            raise DomainError(f"x = y + delta = {y + d} leaves (0, 1)")
        out.append(abs(limit_product(a, b, s, y + d, y, cfg).value))
    return out


def verify_limit_report(a, b, s, y, deltas, cfg: SummationConfig | None = None) -> VerificationReport:
    """Report form: lhs is the product at the smallest delta, rhs the limit 0.

    Passes when the magnitudes strictly decrease as delta decreases.
    """
    ds = sorted((float(d) for d in deltas), reverse=True)
    mags = verify_limit_xy(a, b, s, y, ds, cfg)
    last = limit_product(a, b, s, float(y) + ds[-1], y, cfg)
    ok = all(m2 < m1 for m1, m2 in zip(mags, mags[1:]))
    tol = mags[-2] if len(mags) > 1 else 0.0
    return VerificationReport("limit_xy", dict(a=a, b=b, s=s, y=y), last, ValueWithError(0.0), abs(last.value),
                              last.abs_err, tol, ok, last.terms, None, None,
                              {"deltas": ds, "magnitudes": mags})


def verify_char_inversion_report(chi, n: int, tol: float | None = None) -> VerificationReport:
    chi = parse_character_ref(chi) if isinstance(chi, str) else chi
    if chi.modulus == 1:
        raise DomainError("modulus 1 has an empty Gauss sum; inversion is undefined")
    if not chi.is_primitive:
        raise NotPrimitive(f"character {chi.ref} has conductor {chi.conductor} < modulus {chi.modulus}")
    direct, inverted = char_inversion_sides(chi, n)
    return make_report("char_inversion", dict(chi=chi, n=n), ValueWithError(direct), ValueWithError(inverted),
                       _tol("char_inversion", tol))


# -- grid suites ----------------------------------------------------------------


def _prop1_all(a, b, x, y, cfg=None, tol=None, orientations=BASE_ORIENTATIONS):
    return [verify_prop1(a, b, x, y, cfg, o, tol) for o in orientations]


IDENTITIES: dict[str, Callable[..., Any]] = {
    "theorem1": verify_theorem1,
    "prop1": _prop1_all,
    "prop2": verify_prop2,
    "stuffle": verify_stuffle,
    "recursion": verify_recursion,
    "limit": verify_limit_report,
    "char_inversion": verify_char_inversion_report,
}
_REPORT_NAME = {"prop1": "prop1", "limit": "limit_xy"}


@dataclass
class GridSpec:
    """An identity and its parameter grid.

    ``params`` maps a name to a list of values; keys joined by commas
    (``"x,y"``) take tuples and vary together.  The grid is the cartesian
    product over keys, followed by any explicit ``points``.
    """

    identity: str
    params: dict = field(default_factory=dict)
    points: list = field(default_factory=list)
    tol: float | None = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "GridSpec":
        return cls(d["identity"], dict(d.get("params", {})), list(d.get("points", [])), d.get("tol"),
                   dict(d.get("options", {})))

    def expand(self) -> list[dict]:
        out = []
        if self.params:
            keys = list(self.params)
            for combo in itertools.product(*(self.params[k] for k in keys)):
                point = {}
                for key, val in zip(keys, combo):
                    names = [n.strip() for n in key.split(",")]
                    vals = val if len(names) > 1 else (val,)
                    if len(vals) != len(names):
                        raise ValueError(f"grid key {key!r} needs {len(names)}-tuples, got {val!r}")
                    point.update(zip(names, vals))
                out.append(point)
        out.extend(dict(p) for p in self.points)
        return out


@dataclass(frozen=True)
class SuiteResult:
    identity: str
    reports: tuple
    summary: dict

    def to_dict(self) -> dict:
        return {"identity": self.identity, "summary": self.summary, "reports": [r.to_dict() for r in self.reports]}

    @property
    def all_pass(self) -> bool:
        return self.summary["failed"] == 0 and self.summary.get("coherent", True)


def _coerce_point(identity: str, point: dict) -> dict:
    point = dict(point)
    for key in ("phi", "chi", "psi"):
        if isinstance(point.get(key), str):
            point[key] = parse_character_ref(point[key])
    for key in ("x", "y", "X", "Y"):
        if isinstance(point.get(key), str):
            point[key] = Fraction(point[key])
    return point


def _run_point(identity, point, cfg, tol, options) -> list[VerificationReport]:
    fn = IDENTITIES[identity]
    try:
        point = _coerce_point(identity, point)
        kwargs = dict(options)
        if identity != "limit":
            kwargs["tol"] = tol
        if identity == "char_inversion":
            out = fn(**point, **kwargs)
        else:
            out = fn(**point, cfg=cfg, **kwargs)
    except (DomainError, ArithmeticError, TornheimError) as exc:
        orients = options.get("orientations", BASE_ORIENTATIONS) if identity == "prop1" else (None,)
        name = _REPORT_NAME.get(identity, identity)
        return [skipped_report(f"{name}_{o}" if o else name, point, f"{type(exc).__name__}: {exc}",
                               _tol(name if name in DEFAULT_TOL else identity, tol), o) for o in orients]
    return list(out) if isinstance(out, list) else [out]


def orientation_summary(reports) -> dict:
    """Which prop1 orientations pass at the points with a != b, and at a == b.

    The grid is coherent when every a != b point has exactly one passing
    orientation, it is the same one everywhere, and every a == b point passes
    in all orientations.
    """
    by_point: dict = {}
    for r in reports:
        if r.identity.startswith("prop1_") and not r.skipped:
            key = tuple(_sort_key(v) for v in r.params.values())
            by_point.setdefault(key, (r.params, {}))[1][r.orientation] = r.passed
    unequal, equal_ok, winners = [], True, set()
    for params, res in by_point.values():
        passing = sorted(o for o, ok in res.items() if ok)
        if params["a"] == params["b"]:
            equal_ok &= len(passing) == len(res)
        else:
            unequal.append(passing)
            winners.add(tuple(passing))
    single = len(winners) == 1 and len(next(iter(winners))) == 1
    return {
        "orientation": next(iter(winners))[0] if single else None,
        "passing_sets": sorted(" ".join(w) or "(none)" for w in winners),
        "coherent": bool(by_point) and single and equal_ok,
    }


def run_suite(grid: GridSpec | dict, cfg: SummationConfig | None = None, workers: int = 1) -> SuiteResult:
    """Evaluate every grid point; failures and skips are recorded, never raised."""
    grid = grid if isinstance(grid, GridSpec) else GridSpec.from_dict(grid)
    if grid.identity not in IDENTITIES:
        raise ValueError(f"unknown identity {grid.identity!r}; choose from {sorted(IDENTITIES)}")
    cfg = cfg or DEFAULT_CONFIG
    points = grid.expand()

    def job(p):
        return _run_point(grid.identity, p, cfg, grid.tol, grid.options)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(job, points))
    else:
        chunks = [job(p) for p in points]
    reports = tuple(sorted(itertools.chain.from_iterable(chunks), key=lambda r: r.sort_key))
    summary = {
        "total": len(reports),
        "passed": sum(r.status == "pass" for r in reports),
        "failed": sum(r.status == "fail" for r in reports),
        "skipped": sum(r.skipped for r in reports),
    }
    if grid.identity == "prop1":
        summary.update(orientation_summary(reports))
    return SuiteResult(grid.identity, reports, summary)


THIRD = Fraction(1, 3)
DEFAULT_GRIDS = {
    "theorem1": GridSpec("theorem1", {
        "a": [1, 2, 3], "b": [1, 2, 3], "s": [0, 1, 2, 1.5 + 0.5j],
        "x,y": [(THIRD, 2 * THIRD), (0.2, 0.9), (0.25, 0.4)],
    }),
    "prop1": GridSpec("prop1", {
        "a": [1, 2, 3], "b": [1, 2, 3],
        "x,y": [(THIRD, Fraction(1, 4)), (0.3, 0.7), (0.2, 0.9)],
    }),
    "prop2": GridSpec("prop2", points=[
        dict(a=1, b=1, phi="4:1", chi="3:1", psi="3:1"),
        dict(a=1, b=2, phi="4:1", chi="3:1", psi="5:2"),
        dict(a=2, b=1, phi="3:1", chi="3:1", psi="5:2"),
    ]),
    "stuffle": GridSpec("stuffle", points=[
        dict(s1=s1, s2=s2, X=X, Y=Y) for s1, s2, X, Y in [
            (1, 1, 0.62, 0.27), (1, 2, 0.15, 0.81), (1, 3, 0.44, 0.93), (2, 1, 0.08, 0.57),
            (2, 2, 0.71, 0.36), (2, 3, 0.3, 0.5), (3, 1, 0.89, 0.12), (3, 2, 0.53, 0.66),
            (3, 3, 0.21, 0.48), (1, 2, THIRD, THIRD),
        ]
    ]),
    "recursion": GridSpec("recursion", points=[
        dict(a=a, b=b, s=s, x=x, y=y) for a, b, s, x, y in [
            (2, 2, 1, 0.3, 0.7), (1, 1, 2, 0.2, 0.5), (1, 2, 1, 0.35, 0.8), (3, 1, 2, 0.6, 0.15),
            (2, 3, 1, 0.9, 0.45), (3, 3, 2, 0.12, 0.77), (1, 3, 1, 0.55, 0.25), (2, 1, 2, 0.4, 0.95),
            (3, 2, 1, 0.7, 0.05), (1, 1, 1, 0.25, 0.6),
        ]
    ]),
    "limit": GridSpec("limit", points=[
        dict(a=1, b=1, s=2, y=0.4, deltas=[0.1, 0.01, 0.001]),
        dict(a=2, b=2, s=1, y=0.3, deltas=[0.05, 0.005]),
    ]),
    "char_inversion": GridSpec("char_inversion", points=[
        dict(chi=c.ref, n=n) for k in range(2, 31) for c in characters_mod(k) if c.is_primitive for n in range(k)
    ]),
}


# -- output -----------------------------------------------------------------------

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["identity", "params", "lhs", "rhs", "residual", "budget", "tol", "pass", "terms_used",
                 "orientation"],
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object"},
        "lhs": {"$ref": "#/$defs/side"},
        "rhs": {"$ref": "#/$defs/side"},
        "residual": {"type": "number", "minimum": 0},
        "budget": {"type": "number", "minimum": 0},
        "tol": {"type": "number", "minimum": 0},
        "pass": {"type": "boolean"},
        "terms_used": {"type": "integer", "minimum": 0},
        "orientation": {"type": ["string", "null"]},
        "error": {"type": "string"},
        "detail": {"type": "object"},
    },
    "$defs": {
        "side": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["re", "im", "abs_err"],
                 "properties": {"re": {"type": "number"}, "im": {"type": "number"},
                                "abs_err": {"type": "number", "minimum": 0}}},
            ]
        }
    },
}

CSV_COLUMNS = ["identity", "params", "lhs_re", "lhs_im", "lhs_abs_err", "rhs_re", "rhs_im", "rhs_abs_err",
               "residual", "budget", "tol", "pass", "terms_used", "orientation", "error"]


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=False) + "\n"


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_dict()
        row = [d["identity"], json.dumps(d["params"], separators=(",", ":"))]
        for side in ("lhs", "rhs"):
            v = d[side]
            row += ["", "", ""] if v is None else [repr(v["re"]), repr(v["im"]), repr(v["abs_err"])]
        row += [repr(d["residual"]), repr(d["budget"]), repr(d["tol"]), str(d["pass"]).lower(), d["terms_used"],
                d["orientation"] or "", d.get("error", "")]
        w.writerow(row)
    return buf.getvalue()


def write_json(reports, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(reports_to_json(reports))


def write_csv(reports, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(reports_to_csv(reports))

