"""Dirichlet characters of small modulus, Gauss sums and double L-values.

Characters mod k are built from the unit group (Z/kZ)^*, written as a product
of cyclic factors with fixed generators: -1 and 5 for the 2-power part (just
-1 mod 4, nothing mod 2), then the smallest primitive root of each odd prime
power, primes ascending.  A character is the exponent vector (e_1, ..., e_r)
with chi(g_i) = e^{2 pi i e_i / ord(g_i)}; index = position of that vector in
lexicographic order, so index 0 is the principal character.

Values are held as exact phases (Fractions mod 1) and converted to complex
numbers with exact quarter-turns.
"""

from __future__ import annotations

import cmath
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NotPrimitive
from .series import DEFAULT_CONFIG, SummationConfig, ValueWithError, sum_separable_diagonal
from .tornheim import MAX_DOUBLE_CUTOFF, TWIST_RESOLUTION, TornheimParams, convergence_class
from .zeta import powers

MAX_MODULUS = 200
_QUARTER = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}


def root_of_unity(phase: Fraction) -> complex:
    """e^{2 pi i phase}; quarter turns are exact."""
    phase = phase - math.floor(phase)
    if phase in _QUARTER:
        return _QUARTER[phase]
    return cmath.exp(2j * math.pi * float(phase))


def _factorize(k: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append((p, e))
        p += 1
    if k > 1:
        out.append((k, 1))
    return out


def _primitive_root(p: int, e: int) -> int:
    """Smallest primitive root mod p^e for an odd prime p."""
    pe = p ** e
    order = pe - pe // p
    factors = [q for q, _ in _factorize(order)]
    for g in range(2, pe):
        if math.gcd(g, p) == 1 and all(pow(g, order // q, pe) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {pe}")


def _crt_lift(g: int, pe: int, k: int) -> int:
    """The residue mod k that is g mod pe and 1 mod k / pe."""
    rest = k // pe
    if rest == 1:
        return g % k
    # solve n = g (pe), n = 1 (rest)
    t = ((g - 1) * pow(rest, -1, pe)) % pe
    return (1 + rest * t) % k


def unit_generators(k: int) -> list[tuple[int, int]]:
    """Canonical (generator mod k, order) pairs for (Z/kZ)^*."""
    gens = []
    for p, e in _factorize(k):
        pe = p ** e
        if p == 2:
            if e >= 2:
                gens.append((_crt_lift(pe - 1, pe, k), 2))
            if e >= 3:
                gens.append((_crt_lift(5, pe, k), pe // 4))
        else:
            gens.append((_crt_lift(_primitive_root(p, e), pe, k), pe - pe // p))
    return gens


@functools.lru_cache(maxsize=None)
def _discrete_logs(k: int) -> dict[int, tuple[int, ...]]:
    gens = unit_generators(k)
    logs = {}
    for exps in itertools.product(*(range(o) for _, o in gens)):
        n = 1
        for (g, _), a in zip(gens, exps):
            n = n * pow(g, a, k) % k
        logs[n % k] = exps
    return logs


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod ``modulus`` with its canonical index and exponent vector.

    ``phases[n]`` is chi(n) as a fraction of a full turn, or None when
    gcd(n, modulus) > 1.
    """

    modulus: int
    index: int
    exponents: tuple[int, ...]
    phases: tuple[Fraction | None, ...]
    values: tuple[complex, ...]
    parity: int
    conductor: int

    def __call__(self, n: int) -> complex:
        return self.values[int(n) % self.modulus]

    def phase(self, n: int) -> Fraction | None:
        return self.phases[int(n) % self.modulus]

    @property
    def order(self) -> int:
        return math.lcm(*(p.denominator for p in self.phases if p is not None))

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_real(self) -> bool:
        return all(p is None or p.denominator <= 2 for p in self.phases)

    @property
    def ref(self) -> str:
        return f"{self.modulus}:{self.index}"

    def conjugate(self) -> "DirichletCharacter":
        orders = [o for _, o in unit_generators(self.modulus)]
        exps = tuple((-e) % o for e, o in zip(self.exponents, orders))
        return characters_mod(self.modulus)[_index_of(exps, orders)]

    def table(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)

    def __repr__(self):
        return f"DirichletCharacter({self.ref}, conductor={self.conductor}, parity={self.parity:+d})"


def _index_of(exps, orders) -> int:
    idx = 0
    for e, o in zip(exps, orders):
        idx = idx * o + e
    return idx


def _conductor(k: int, phases) -> int:
    for d in sorted(d for d in range(1, k + 1) if k % d == 0):
        if all(phases[n] == 0 for n in range(1, k) if phases[n] is not None and n % d == 1 % d):
            return d
    return k


def _build(k: int, index: int, exps: tuple[int, ...]) -> DirichletCharacter:
    gens = unit_generators(k)
    logs = _discrete_logs(k)
    phases = []
    for n in range(k):
        if math.gcd(n, k) != 1:
            phases.append(None)
            continue
        f = sum((Fraction(e * a, o) for (_, o), e, a in zip(gens, exps, logs[n % k])), Fraction(0))
        phases.append(f - math.floor(f))
    if k == 1:
        phases = [Fraction(0)]
    values = tuple(0j if p is None else root_of_unity(p) for p in phases)
    parity = int(round(values[(k - 1) % k].real))
    return DirichletCharacter(k, index, tuple(exps), tuple(phases), values, parity, _conductor(k, phases))


@functools.lru_cache(maxsize=None)
def characters_mod(k: int) -> tuple[DirichletCharacter, ...]:
    """All phi(k) characters mod k in canonical order."""
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise DomainError(f"modulus must be an integer, got {k!r}")
    k = int(k)
    if not 1 <= k <= MAX_MODULUS:
        raise DomainError(f"modulus must lie in 1..{MAX_MODULUS}, got {k}")
    orders = [o for _, o in unit_generators(k)]
    return tuple(_build(k, i, exps) for i, exps in enumerate(itertools.product(*(range(o) for o in orders))))


def character(k: int, index: int) -> DirichletCharacter:
    chars = characters_mod(k)
    if not (isinstance(index, (int, np.integer)) and 0 <= index < len(chars)):
        raise DomainError(f"character index must lie in 0..{len(chars) - 1} for modulus {k}, got {index!r}")
    return chars[int(index)]


def parse_character_ref(text: str) -> DirichletCharacter:
    """'k:i' -> the i-th character mod k."""
    try:
        k, i = (int(part) for part in text.split(":"))
    except ValueError:
        raise DomainError(f"character reference must look like 'modulus:index', got {text!r}") from None
    return character(k, i)


def totient(k: int) -> int:
    return sum(1 for n in range(1, k + 1) if math.gcd(n, k) == 1)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{l=1}^{k-1} chi(l) e^{2 pi i l / k}; empty (zero) for k = 1."""
    k = chi.modulus
    terms = [root_of_unity(chi.phase(l) + Fraction(l, k)) for l in range(1, k) if chi.phase(l) is not None]
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def char_inversion_sides(chi: DirichletCharacter, n: int) -> tuple[complex, complex]:
    """chi(n) and tau(conj chi)^{-1} sum_{l=1}^{k-1} conj chi(l) e^{2 pi i l n / k}."""
    k = chi.modulus
    if k == 1:
        raise DomainError("modulus 1 has an empty Gauss sum; inversion is undefined")
    if not chi.is_primitive:
        raise NotPrimitive(f"character {chi.ref} has conductor {chi.conductor} < modulus {k}")
    bar = chi.conjugate()
    terms = [root_of_unity(bar.phase(l) + Fraction(l * n, k)) for l in range(1, k) if bar.phase(l) is not None]
    total = complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))
    return chi(n), total / gauss_sum(bar)


def verify_char_inversion(chi: DirichletCharacter, n: int) -> float:
    """Residual of the inversion formula for a primitive chi at n."""
    direct, inverted = char_inversion_sides(chi, n)
    return abs(direct - inverted)


def fourier_support(chi: DirichletCharacter, tol: float = 1e-12) -> list[Fraction]:
    """Frequencies f/k (mod 1) with nonzero coefficient in chi(n) = sum_f c_f e^{2 pi i f n / k}."""
    k = chi.modulus
    out = []
    for f in range(k):
        c = sum(chi(r) * root_of_unity(Fraction(-f * r, k)) for r in range(k)) / k
        if abs(c) > tol:
            out.append(Fraction(f, k))
    return out


def double_L_admissible(a: int, b: int, phi, chi, psi) -> tuple[bool, str]:
    """Expand each character into additive characters and require every
    resulting T(0, a, b; f1 + f3, f2 + f3) to be evaluable."""
    for f1, f2, f3 in itertools.product(fourier_support(phi), fourier_support(chi), fourier_support(psi)):
        cls = convergence_class(TornheimParams(0, a, b, f1 + f3, f2 + f3))
        if not cls.evaluable:
            return False, f"component with twists ({f1 + f3}, {f2 + f3}) is {cls.reason}"
    return True, "every additive component converges"


def double_L(a: int, b: int, phi: DirichletCharacter, chi: DirichletCharacter, psi: DirichletCharacter,
             cfg: SummationConfig | None = None) -> ValueWithError:
    """sum over m + n <= R of phi(m) chi(n) psi(m+n) / (n^a (m+n)^b), R -> oo."""
    cfg = cfg or DEFAULT_CONFIG
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")
    ok, reason = double_L_admissible(a, b, phi, chi, psi)
    if not ok:
        raise DomainError(f"L({a},{b}; {phi.ref}, {chi.ref}, {psi.ref}) is inadmissible: {reason}")
    period = math.lcm(phi.modulus, chi.modulus, psi.modulus)
    R = min(max(cfg.max_diagonal, TWIST_RESOLUTION * period), MAX_DOUBLE_CUTOFF)
    run = cfg.with_cutoff(R)
    n = np.arange(1, run.max_diagonal + 1)

    def tab(c):
        return c.table()[n % c.modulus]

    return sum_separable_diagonal(tab(phi), tab(chi) * powers(n, a), tab(psi) * powers(n, b), run)
