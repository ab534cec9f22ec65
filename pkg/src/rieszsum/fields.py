"""Number fields at desk scale: shape constants, ideal-counting coefficients
a(n), and the generalized divisor function sigma_{K,alpha}(n).

A field enters the computation only through
  * its shape constants (r1, r2, degree rho, unit rank r, discriminant,
    class number h, regulator R, roots of unity w, and the conductor-like
    constant A = sqrt|disc| / (2^r2 pi^(rho/2))), and
  * the coefficients a(n) = number of integral ideals of norm n.

Presets cover the rational field and quadratic fields (a(n) is the
convolution of 1 with the Kronecker symbol chi_D).  Anything else must
supply a prime-splitting table; we never factor ideals ourselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import PreconditionError

__all__ = [
    "FieldDescriptor",
    "CoefficientSeries",
    "SigmaSeries",
    "rational_field",
    "quadratic_field",
    "field_from_file",
    "kronecker_symbol",
    "ideal_count_series",
    "gaussian_norm_count_oracle",
    "divisor_sigma",
    "sigma_symmetry_residual",
]


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    """Shape constants of a number field.

    rho = r1 + 2 r2 is the degree, r = r1 + r2 - 1 the unit rank, and
    a_const = sqrt|disc| / (2^r2 pi^(rho/2)) the constant appearing in the
    functional equation. splitting maps a prime p to the tuple of residue
    degrees of the primes above p (only needed for non-preset fields).
    """

    label: str
    r1: int
    r2: int
    disc: int
    class_number: int
    regulator: float
    roots_of_unity: int
    splitting: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0 or self.r1 + self.r2 == 0:
            raise PreconditionError("need r1, r2 >= 0 with r1 + 2 r2 >= 1")
        if self.disc == 0:
            raise PreconditionError("discriminant must be nonzero")
        if self.class_number < 1 or self.roots_of_unity < 1:
            raise PreconditionError("class number and root-of-unity count are positive")
        if self.regulator <= 0:
            raise PreconditionError("regulator must be positive")
        if self.rho == 2:
            # validation hook for quadratic presets: imaginary quadratic fields
            # have unit rank 0, regulator 1, and w in {2, 4, 6}
            if (self.disc < 0) != (self.r2 == 1):
                raise PreconditionError("sign of disc inconsistent with r2 for a quadratic field")
            if self.disc < 0:
                if self.roots_of_unity not in (2, 4, 6):
                    raise PreconditionError("imaginary quadratic field needs omega in {2,4,6}")
                if abs(self.regulator - 1.0) > 1e-12:
                    raise PreconditionError("imaginary quadratic field has regulator 1")

    @property
    def rho(self) -> int:
        return self.r1 + 2 * self.r2

    @property
    def unit_rank(self) -> int:
        return self.r1 + self.r2 - 1

    @property
    def a_const(self) -> float:
        return math.sqrt(abs(self.disc)) / (2 ** self.r2 * math.pi ** (self.rho / 2))

    @property
    def is_rational(self) -> bool:
        return self.rho == 1

    @property
    def is_quadratic(self) -> bool:
        return self.rho == 2 and not self.splitting

    def residue(self) -> float:
        """Residue of the field zeta function at s = 1 (class number formula):
        2^(r+1) pi^r2 R h / (w sqrt|disc|)."""
        return (2 ** (self.unit_rank + 1) * math.pi ** self.r2 * self.regulator
                * self.class_number / (self.roots_of_unity * math.sqrt(abs(self.disc))))


def rational_field() -> FieldDescriptor:
    return FieldDescriptor("Q", r1=1, r2=0, disc=1, class_number=1,
                           regulator=1.0, roots_of_unity=2)


_QUADRATIC_PRESETS = {
    # d -> (h, R, w); fundamental discriminant derived from d
    -1: (1, 1.0, 4),
    -2: (1, 1.0, 2),
    -3: (1, 1.0, 6),
    2: (1, math.log(1 + math.sqrt(2)), 2),
    3: (1, math.log(2 + math.sqrt(3)), 2),
    5: (1, math.log((1 + math.sqrt(5)) / 2), 2),
}


def fundamental_discriminant(d: int) -> int:
    """Fundamental discriminant of Q(sqrt(d)) for squarefree d != 0, 1."""
    if d in (0, 1):
        raise PreconditionError("d must define a genuine quadratic field")
    ad = abs(d)
    for p in range(2, math.isqrt(ad) + 1):
        if ad % (p * p) == 0:
            raise PreconditionError(f"d = {d} is not squarefree")
    return d if d % 4 == 1 else 4 * d


def quadratic_field(d: int, class_number=None, regulator=None, roots_of_unity=None):
    """Quadratic field Q(sqrt(d)).  For the shipped presets (h, R, w) are
    known; otherwise they must be supplied (they are inputs, not computed)."""
    D = fundamental_discriminant(d)
    preset = _QUADRATIC_PRESETS.get(d)
    if preset is not None:
        h0, R0, w0 = preset
    else:
        if class_number is None or regulator is None or roots_of_unity is None:
            raise PreconditionError(
                f"no preset for d={d}: supply class_number, regulator, roots_of_unity")
        h0, R0, w0 = class_number, regulator, roots_of_unity
    h = class_number if class_number is not None else h0
    R = regulator if regulator is not None else R0
    w = roots_of_unity if roots_of_unity is not None else w0
    r1, r2 = (0, 1) if d < 0 else (2, 0)
    return FieldDescriptor(f"Q(sqrt({d}))", r1=r1, r2=r2, disc=D,
                           class_number=h, regulator=R, roots_of_unity=w)


def field_from_file(path) -> FieldDescriptor:
    """Parse a field descriptor file.

    Plain key/value text, '#' starts a comment.  Keys: label, r1, r2, disc,
    h, regulator, omega, and repeated 'split.<p> = f1,f2,...' lines listing
    residue degrees of the primes above p.  '=' and ':' both separate keys
    from values.
    """
    keys: dict[str, str] = {}
    splitting: dict[int, tuple[int, ...]] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, val = line.split("=", 1)
            elif ":" in line:
                key, val = line.split(":", 1)
            else:
                raise PreconditionError(f"cannot parse descriptor line: {raw!r}")
            key, val = key.strip(), val.strip()
            if key.startswith("split."):
                p = int(key[len("split."):])
                degs = tuple(int(tok) for tok in val.replace(",", " ").split())
                if p < 2 or any(f < 1 for f in degs):
                    raise PreconditionError(f"bad splitting entry for p={p}")
                splitting[p] = degs
            else:
                keys[key] = val
    try:
        desc = FieldDescriptor(
            label=keys.get("label", "field"),
            r1=int(keys["r1"]),
            r2=int(keys["r2"]),
            disc=int(keys["disc"]),
            class_number=int(keys["h"]),
            regulator=float(keys["regulator"]),
            roots_of_unity=int(keys["omega"]),
            splitting=splitting,
        )
    except KeyError as exc:
        raise PreconditionError(f"missing descriptor key {exc}") from exc
    return desc


# ---------------------------------------------------------------------------
# coefficient series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSeries:
    """Ideal-count coefficients a(1..N); a[0] is unused padding.

    Immutable after construction; all downstream reads are safe to share.
    """

    bound: int
    a: np.ndarray

    def __post_init__(self):
        self.a.setflags(write=False)

    def value(self, n: int) -> int:
        if not 1 <= n <= self.bound:
            raise PreconditionError(f"n={n} outside table (bound {self.bound})")
        return int(self.a[n])


@dataclass(frozen=True)
class SigmaSeries:
    """sigma_{K,alpha}(1..N) = sum_{d|n} a(d) a(n/d) d^alpha; values[0] unused."""

    bound: int
    alpha: complex
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    def value(self, n: int) -> complex:
        if not 1 <= n <= self.bound:
            raise PreconditionError(f"n={n} outside table (bound {self.bound})")
        return complex(self.values[n])


def _jacobi(a: int, m: int) -> int:
    # Jacobi symbol (a/m) for odd m >= 1, 0 <= a < m
    assert m >= 1 and m % 2 == 1
    result = 1
    while True:
        a %= m
        if a == 0:
            return result if m == 1 else 0
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        if a == 1:
            return result
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a, m = m, a


def kronecker_symbol(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for positive n; D must be a fundamental
    discriminant or 1 (in particular D = 0, 1 mod 4)."""
    if D % 4 not in (0, 1):
        raise PreconditionError(f"D={D} is not 0 or 1 mod 4")
    if n <= 0:
        raise PreconditionError("n must be positive")
    result = 1
    if n % 2 == 0:
        if D % 2 == 0:
            return 0
        chi2 = 1 if D % 8 in (1, 7) else -1
        while n % 2 == 0:
            n //= 2
            result *= chi2
    return result * _jacobi(D % n, n)


def _kronecker_row(D: int, N: int) -> np.ndarray:
    """chi_D(1..N) as an int8 array (index 0 unused)."""
    chi = np.zeros(N + 1, dtype=np.int8)
    period = abs(D)
    for res in range(period):
        val = kronecker_symbol(D, res + period)  # representative > 0 of the class
        if val:
            start = res if res >= 1 else period
            chi[start::period] = val
    return chi


def _local_coefficients(p: int, degrees: tuple[int, ...], jmax: int) -> list[int]:
    # coefficients of prod_i (1 - T^{f_i})^{-1} up to degree jmax:
    # number of ways to write j as an ordered-by-factor sum of multiples of f_i
    poly = [0] * (jmax + 1)
    poly[0] = 1
    for f in degrees:
        for j in range(f, jmax + 1):
            poly[j] += poly[j - f]
    return poly


def ideal_count_series(field: FieldDescriptor, N: int) -> CoefficientSeries:
    """Tabulate a(n) for n <= N.

    Rational field: a(n) = 1.  Quadratic field of discriminant D:
    a(n) = sum_{d|n} chi_D(d), by a divisor sieve.  Table-backed fields:
    a(p^j) from the declared splitting type, extended multiplicatively.
    """
    if N < 1:
        raise PreconditionError("N must be >= 1")
    if field.is_rational:
        a = np.ones(N + 1, dtype=np.int64)
        a[0] = 0
        return CoefficientSeries(N, a)
    if field.is_quadratic:
        chi = _kronecker_row(field.disc, N).astype(np.int64)
        a = np.zeros(N + 1, dtype=np.int64)
        for d in range(1, N + 1):
            if chi[d]:
                a[d::d] += chi[d]
        a[0] = 0
        return CoefficientSeries(N, a)

    # table-backed: multiplicative build over the smallest-prime-factor walk
    spf = np.zeros(N + 1, dtype=np.int64)
    for p in range(2, N + 1):
        if spf[p] == 0:
            spf[p::p] = np.where(spf[p::p] == 0, p, spf[p::p])
    local: dict[int, list[int]] = {}
    a = np.zeros(N + 1, dtype=np.int64)
    a[1] = 1
    for n in range(2, N + 1):
        p = int(spf[n])
        m, j = n, 0
        while m % p == 0:
            m //= p
            j += 1
        if p not in local:
            if p not in field.splitting:
                raise PreconditionError(
                    f"field {field.label!r}: no splitting data for prime {p} <= {N}")
            degs = field.splitting[p]
            if sum(degs) > field.rho:
                raise PreconditionError(f"splitting degrees above p={p} exceed the degree")
            local[p] = _local_coefficients(p, degs, int(math.log(N, p)) + 1)
        a[n] = a[m] * local[p][j]
    return CoefficientSeries(N, a)


def gaussian_norm_count_oracle(n: int) -> int:
    """Number of ideals of Z[i] of norm n, by brute-force lattice counting:
    #{(u,v) in Z^2 : u^2 + v^2 = n} / 4 (four units).  Independent of the
    character-convolution path; used as a cross-check oracle."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    count = 0
    for u in range(0, math.isqrt(n) + 1):
        v2 = n - u * u
        v = math.isqrt(v2)
        if v * v == v2:
            count += (2 if u > 0 else 1) * (2 if v > 0 else 1)
    assert count % 4 == 0
    return count // 4


def divisor_sigma(series: CoefficientSeries, alpha: complex, N: int) -> SigmaSeries:
    """sigma_{K,alpha}(n) = sum_{d|n} a(d) a(n/d) d^alpha for n <= N,
    by an O(N log N) sieve over divisor pairs."""
    if N > series.bound:
        raise PreconditionError(f"N={N} exceeds coefficient table bound {series.bound}")
    if N < 1:
        raise PreconditionError("N must be >= 1")
    alpha = complex(alpha)
    a = series.a
    out = np.zeros(N + 1, dtype=np.complex128)
    for d in range(1, N + 1):
        ad = a[d]
        if ad:
            out[d::d] += (ad * d ** alpha) * a[1:N // d + 1]
    out[0] = 0.0
    return SigmaSeries(N, alpha, out)


def sigma_symmetry_residual(series: CoefficientSeries, alpha: complex, N: int) -> float:
    """max_n |sigma_alpha(n) n^(-alpha/2) - sigma_{-alpha}(n) n^(alpha/2)|
    / (1 + |sigma_alpha(n) n^(-alpha/2)|) over n <= N."""
    alpha = complex(alpha)
    plus = divisor_sigma(series, alpha, N).values[1:]
    minus = divisor_sigma(series, -alpha, N).values[1:]
    n = np.arange(1, N + 1, dtype=np.float64)
    lhs = plus * n ** (-alpha / 2)
    rhs = minus * n ** (alpha / 2)
    return float(np.max(np.abs(lhs - rhs) / (1 + np.abs(lhs))))
