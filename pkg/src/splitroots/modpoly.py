"""Dense polynomial arithmetic over prime fields and root extraction.

Polynomials over F_p are carried as coefficient lists, constant term first,
with no trailing zeros; the empty list is the zero polynomial.  Python's
arbitrary-precision integers absorb all intermediate products, so the
modulus bound (p < 2**62) is a contract limit rather than an overflow one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .primes import is_prime

MAX_MODULUS = 1 << 62
MAX_COEFF = 1 << 62
BRUTE_FORCE_LIMIT = 4096


class NotFullySplitError(ValueError):
    """Root extraction was asked for a polynomial that does not fully split."""


class RamifiedPrimeError(ValueError):
    """Cycle types are only defined modulo primes not dividing the discriminant."""


# ---------------------------------------------------------------------------
# coefficient-list helpers (internal)

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _trim(out)


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([v % p for v in out])


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], _trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = r[db + k] % p
        if c:
            c = c * inv % p
            q[k] = c
            for i, v in enumerate(b):
                r[i + k] = (r[i + k] - c * v) % p
    return _trim(q), _trim(r[:db])


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [v % p for v in a], [v % p for v in b]
    _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [v * inv % p for v in a]
    return a


def _powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _divmod(_mul(base, base, p), mod, p)[1]
    return result


def _eval(c: list[int], x: int, p: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = (acc * x + v) % p
    return acc


def _deflate(c: list[int], r: int, p: int) -> tuple[list[int], int]:
    """Divide by (x - r); returns (quotient, remainder), remainder = c(r)."""
    q = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, -1, -1):
        acc = (acc * r + c[i]) % p
        if i:
            q[i - 1] = acc
    return q, acc


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class ModPoly:
    """A polynomial over F_p: residue coefficients in [0, p), constant first."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        if p < 2:
            raise ValueError("modulus must be >= 2")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")
        if any(not 0 <= c < p for c in self.coeffs):
            raise ValueError("coefficients must be reduced into [0, p)")

    @property
    def degree(self) -> int:
        # the zero polynomial carries the sentinel degree -1
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return _eval(list(self.coeffs), x, self.modulus)


@dataclass(frozen=True)
class MonicIntPolynomial:
    """f(x) = x^n + a_{n-1} x^{n-1} + ... + a_0 with integer a_i.

    coeffs holds (a_0, ..., a_{n-1}); the leading 1 is implicit.  The
    polynomial must have degree >= 2 and be squarefree over Q, i.e. its
    discriminant is nonzero (a necessary condition for irreducibility).
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 2")
        if any(abs(c) >= MAX_COEFF for c in coeffs):
            raise ValueError("coefficients must satisfy |a_i| < 2**62")
        object.__setattr__(self, "coeffs", coeffs)
        disc = _resultant_discriminant(coeffs)
        if disc == 0:
            raise ValueError("polynomial is not squarefree (zero discriminant)")
        object.__setattr__(self, "_disc", disc)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coeffs(self) -> tuple[int, ...]:
        """(a_0, ..., a_{n-1}, 1) including the leading coefficient."""
        return self.coeffs + (1,)

    def __call__(self, x: int) -> int:
        acc = 1
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class SplitRecord:
    """A fully split prime p with the sorted roots of f mod p in [0, p)."""

    p: int
    roots: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= r < self.p for r in self.roots):
            raise ValueError("roots must lie in [0, p)")
        if any(a > b for a, b in zip(self.roots, self.roots[1:])):
            raise ValueError("roots must be sorted ascending")


# ---------------------------------------------------------------------------
# discriminant

def _resultant_discriminant(coeffs: tuple[int, ...]) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f, exact over Z."""
    n = len(coeffs)
    f = list(coeffs) + [1]
    fp = [i * f[i] for i in range(1, n + 1)]  # derivative, degree n-1, lc = n
    res = _resultant(f, fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res


def _resultant(f: list[int], g: list[int]) -> int:
    """Resultant via Bareiss fraction-free elimination of the Sylvester matrix."""
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    m = [[0] * size for _ in range(size)]
    frev, grev = f[::-1], g[::-1]
    for i in range(dg):
        m[i][i : i + df + 1] = frev
    for i in range(df):
        m[dg + i][i : i + dg + 1] = grev
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def discriminant(f: MonicIntPolynomial) -> int:
    """Exact integer discriminant; nonzero by the construction invariant."""
    return f._disc  # computed once in the constructor


# ---------------------------------------------------------------------------
# operations

def reduce_mod(f: MonicIntPolynomial, p: int) -> ModPoly:
    """f with coefficients reduced into [0, p); stays monic of degree n."""
    if not 2 <= p < MAX_MODULUS:
        raise ValueError("modulus out of range")
    return ModPoly(p, tuple(c % p for c in f.coeffs) + (1,))


def frobenius_power(g: ModPoly) -> ModPoly:
    """x^p mod (g, p) by binary exponentiation; g must be monic of degree >= 2."""
    if g.degree < 2 or g.coeffs[-1] != 1:
        raise ValueError("modulus polynomial must be monic of degree >= 2")
    out = _powmod([0, 1], g.modulus, list(g.coeffs), g.modulus)
    return ModPoly(g.modulus, tuple(out))


def _is_x(c: list[int] | tuple[int, ...]) -> bool:
    return len(c) == 2 and c[0] == 0 and c[1] == 1


def splits_completely(f: MonicIntPolynomial, p: int) -> bool:
    """True iff f is congruent to a product of n linear factors mod p.

    Unramified p (not dividing disc f): equivalent to x^p = x in F_p[x]/(f).
    Ramified p: decided by explicit factorization with multiplicity.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_MODULUS:
        raise ValueError("modulus out of range")
    if f._disc % p != 0:
        return _is_x(frobenius_power(reduce_mod(f, p)).coeffs)
    try:
        roots_mod_p(f, p)
    except NotFullySplitError:
        return False
    return True


def roots_mod_p(
    f: MonicIntPolynomial,
    p: int,
    *,
    seed: int | None = None,
    method: str = "auto",
) -> list[int]:
    """All n roots of f mod p, with multiplicity, sorted ascending.

    Roots are found by exhaustive evaluation for p < 4096 and by randomized
    equal-degree splitting (gcd with (x+c)^((p-1)/2) - 1 for random c) above,
    with deflation once linear factors appear.  method forces "brute" or "cz";
    p = 2 is always brute-forced since the exponent trick needs odd p.  The
    recursion is reproducible for a fixed seed (derived from (f, p) when not
    given); the sorted output never depends on the seed.

    Raises NotFullySplitError if f mod p has an irreducible factor of
    degree > 1.
    """
    if method not in ("auto", "brute", "cz"):
        raise ValueError(f"unknown method {method!r}")
    if not 2 <= p < MAX_MODULUS:
        raise ValueError("modulus out of range")
    g = [c % p for c in f.full_coeffs()]
    brute = p == 2 or (method == "brute") or (method == "auto" and p < BRUTE_FORCE_LIMIT)
    if brute:
        roots = _brute_roots(g, p)
    else:
        if seed is None:
            seed = _derive_seed(f.coeffs, p)
        roots = _cz_roots(g, p, random.Random(seed))
    if roots is None:
        raise NotFullySplitError(f"polynomial does not fully split mod {p}")
    return roots


def _brute_roots(g: list[int], p: int) -> list[int] | None:
    roots = []
    rem = list(g)
    for r in range(p):
        if len(rem) <= 1:
            break
        while len(rem) > 1:
            q, v = _deflate(rem, r, p)
            if v != 0:
                break
            roots.append(r)
            rem = q
    return roots if len(rem) == 1 else None


def _derive_seed(coeffs: tuple[int, ...], p: int) -> int:
    mask = (1 << 64) - 1
    s = p & mask
    for c in coeffs:
        s = (s * 6364136223846793005 + (c & mask) + 1442695040888963407) & mask
    return s


def _cz_roots(g: list[int], p: int, rng: random.Random) -> list[int] | None:
    # distinct linear part: gcd(x^p - x, g)
    xp = _powmod([0, 1], p, g, p)
    s = _gcd(_sub(xp, [0, 1], p), g, p)
    if not s or len(s) == 1:
        return None if len(g) > 1 else []
    distinct = _cz_split_linear(s, p, rng)
    # recover multiplicities by repeated deflation of g itself
    roots = []
    rem = list(g)
    for r in sorted(distinct):
        while len(rem) > 1:
            q, v = _deflate(rem, r, p)
            if v != 0:
                break
            roots.append(r)
            rem = q
    return sorted(roots) if len(rem) == 1 else None


def _cz_split_linear(s: list[int], p: int, rng: random.Random) -> list[int]:
    """Roots of a squarefree product of distinct linear factors, via CZ."""
    half = (p - 1) // 2
    roots: list[int] = []
    stack = [s]
    while stack:
        u = stack.pop()
        d = len(u) - 1
        if d <= 0:
            continue
        if d == 1:
            roots.append((-u[0]) % p)
            continue
        while True:
            c = rng.randrange(p)
            w = _powmod([c, 1], half, u, p)
            t = _gcd(_sub(w, [1], p), u, p)
            if 0 < len(t) - 1 < d:
                stack.append(t)
                stack.append(_divmod(u, t, p)[0])
                break
    return roots


def cycle_type(f: MonicIntPolynomial, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of f mod p, as a descending partition.

    Uses distinct-degree factorization: factors of degree d divide
    x^(p^d) - x.  Only defined for unramified p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f._disc % p == 0:
        raise RamifiedPrimeError(f"{p} divides disc(f)")
    rem = [c % p for c in f.full_coeffs()]
    parts: list[int] = []
    h = _divmod([0, 1], rem, p)[1]  # x mod rem (rem may have degree 1 later)
    d = 0
    while len(rem) - 1 >= 1:
        d += 1
        if 2 * d > len(rem) - 1:
            parts.append(len(rem) - 1)
            break
        h = _powmod(h, p, rem, p)
        t = _gcd(_sub(h, [0, 1], p), rem, p)
        if len(t) > 1:
            parts.extend([d] * ((len(t) - 1) // d))
            rem = _divmod(rem, t, p)[0]
            h = _divmod(h, rem, p)[1]
    return tuple(sorted(parts, reverse=True))
