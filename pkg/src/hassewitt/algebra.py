"""Exact arithmetic: prime fields GF(p), small extensions GF(p^a), and sparse
multivariate Laurent polynomials.

A SparseLaurentPoly stores its terms as a dict mapping exponent tuples
(negative entries allowed) to plain int coefficients.  With ``modulus=p``
every stored coefficient lies in [1, p); with ``modulus=None`` coefficients
are arbitrary nonzero integers.  Zero coefficients are never stored, and all
term iteration is in lexicographic exponent order, so serialization is
deterministic.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk scale)."""
    if n < 2:
        return False
    for q in range(2, int(math.isqrt(n)) + 1):
        if n % q == 0:
            return False
    return True


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


class PrimeFieldElement:
    """An element of GF(p), stored as an integer reduced into [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        _require_prime(p)
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - other.value, self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inversion of 0 in GF(p)")
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return (
            isinstance(other, PrimeFieldElement)
            and self.p == other.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, p={self.p})"


@lru_cache(maxsize=None)
def factorial_table(p):
    """Table of 0!, 1!, ..., (p-1)! reduced mod p."""
    _require_prime(p)
    table = [1] * p
    for k in range(1, p):
        table[k] = table[k - 1] * k % p
    return tuple(table)


def multinomial_mod_p(e, p) -> PrimeFieldElement:
    """(p-1)! / (e_1! ... e_N!) mod p, for e summing to p-1.

    Every e_k < p, so each factorial is a unit mod p and the quotient is
    computed from the factorial table with modular inverses.
    """
    e = tuple(e)
    if any(x < 0 for x in e):
        raise ValueError("negative entry in multinomial argument")
    if sum(e) != p - 1:
        raise ValueError(f"entries sum to {sum(e)}, expected p-1 = {p - 1}")
    table = factorial_table(p)
    val = table[p - 1]
    for x in e:
        val = val * pow(table[x], p - 2, p) % p
    return PrimeFieldElement(val, p)


class SparseLaurentPoly:
    """Finitely supported map from integer exponent vectors to coefficients.

    Immutable by convention: no method mutates ``self``; all operations
    return fresh polynomials.
    """

    __slots__ = ("nvars", "modulus", "terms")

    def __init__(self, nvars, modulus=None, terms=None):
        if modulus is not None:
            _require_prime(modulus)
        self.nvars = nvars
        self.modulus = modulus
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            if modulus is not None:
                c %= modulus
            if c:
                clean[exp] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars, modulus=None):
        return cls(nvars, modulus, {})

    @classmethod
    def constant(cls, nvars, c, modulus=None):
        return cls(nvars, modulus, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponent, c=1, modulus=None):
        exponent = tuple(exponent)
        return cls(len(exponent), modulus, {exponent: c})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def constant_term(self) -> int:
        """Coefficient at the all-zeros exponent (0 if absent)."""
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def support(self):
        return set(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other):
        if self.nvars != other.nvars:
            raise ValueError("operands have different numbers of variables")
        if self.modulus != other.modulus:
            raise ValueError("operands have different coefficient moduli")

    def __add__(self, other):
        if not isinstance(other, SparseLaurentPoly):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return SparseLaurentPoly(self.nvars, self.modulus, out)

    def __neg__(self):
        return SparseLaurentPoly(
            self.nvars, self.modulus, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SparseLaurentPoly):
            return NotImplemented
        self._check_compat(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return SparseLaurentPoly(self.nvars, self.modulus, out)

    __rmul__ = __mul__

    def scale(self, c: int):
        return SparseLaurentPoly(
            self.nvars, self.modulus, {e: c * v for e, v in self.terms.items()}
        )

    def shift(self, delta):
        """Multiply by the monomial with exponent vector ``delta``."""
        delta = tuple(delta)
        if len(delta) != self.nvars:
            raise ValueError("shift vector has wrong length")
        return SparseLaurentPoly(
            self.nvars,
            self.modulus,
            {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()},
        )

    def reduce_mod(self, p):
        """Reduce an integer-coefficient polynomial mod p."""
        _require_prime(p)
        if self.modulus is not None:
            if self.modulus != p:
                raise ValueError("polynomial already carries a different modulus")
            return self
        return SparseLaurentPoly(self.nvars, p, dict(self.terms))

    def __eq__(self, other):
        return (
            isinstance(other, SparseLaurentPoly)
            and self.nvars == other.nvars
            and self.modulus == other.modulus
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.modulus, tuple(self.sorted_terms())))

    # -- evaluation & serialization ---------------------------------------

    def evaluate(self, point, field):
        """Substitute variable k -> point[k] (elements of ``field``).

        Negative exponents are handled via field inversion, so substituting
        0 for a variable that appears with negative exponent raises.
        """
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        if self.modulus is not None and field.p != self.modulus:
            raise ValueError("field characteristic does not match modulus")
        acc = field.zero()
        for exp, c in self.sorted_terms():
            val = field.from_int(c)
            for x, e in zip(point, exp):
                if e:
                    val = val * x**e
            acc = acc + val
        return acc

    def canonical_str(self) -> str:
        """Canonical text form ``c*L1^e1*...*LN^eN + ...``, lex term order."""
        if self.is_zero:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [str(c)]
            factors += [f"L{k + 1}^{e}" for k, e in enumerate(exp)]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<SparseLaurentPoly {self.canonical_str()} (mod {self.modulus})>"


def det_leibniz(mat, bound=8) -> SparseLaurentPoly:
    """Determinant of a square matrix of SparseLaurentPoly, by the signed sum
    over all permutations.  Guarded by ``bound`` against factorial blowup.
    """
    m = len(mat)
    if any(len(row) != m for row in mat):
        raise ValueError("matrix is not square")
    if m > bound:
        raise ValueError(f"matrix size {m} exceeds determinant bound {bound}")
    if m == 0:
        raise ValueError("empty matrix")
    proto = mat[0][0]
    acc = SparseLaurentPoly.zero(proto.nvars, proto.modulus)
    for perm in itertools.permutations(range(m)):
        prod = SparseLaurentPoly.constant(proto.nvars, 1, proto.modulus)
        for i in range(m):
            prod = prod * mat[i][perm[i]]
            if prod.is_zero:
                break
        acc = acc + prod.scale(_perm_sign(perm))
    return acc


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# Extension fields GF(p^a).  Internal helpers work on dense coefficient
# tuples (constant term first) over GF(p).
# ---------------------------------------------------------------------------


def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(f, g, p):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pdivmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - 1 - dg
        coef = f[-1] * inv_lead % p
        quot[shift] = coef
        for i in range(dg + 1):
            f[shift + i] = (f[shift + i] - coef * g[i]) % p
        f.pop()
    return _ptrim(quot), _ptrim(f)


def _is_irreducible(poly, p):
    """Exhaustive divisor search; fine for the desk-scale degrees used here."""
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for ddeg in range(1, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=ddeg):
            g = tuple(lower) + (1,)
            _, rem = _pdivmod(poly, g, p)
            if not rem:
                return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p, a):
    """Lexicographically smallest monic irreducible of degree a over GF(p).

    Candidates are ordered by their lower-coefficient tuple (c0, ..., c_{a-1})
    in ascending lexicographic order; the chosen modulus is deterministic, so
    GF(p^a) values are reproducible across runs.
    """
    _require_prime(p)
    if a < 1:
        raise ValueError("extension degree must be >= 1")
    for lower in itertools.product(range(p), repeat=a):
        cand = lower + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class ExtensionField:
    """GF(p^a) as GF(p)[t] modulo the canonical irreducible of degree a."""

    def __init__(self, p, a=1):
        _require_prime(p)
        self.p = p
        self.a = a
        self.q = p**a
        self.modulus = find_irreducible(p, a)

    def element(self, coeffs) -> "ExtensionFieldElement":
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.a:
            raise ValueError(f"coefficient vector longer than degree {self.a}")
        coeffs += [0] * (self.a - len(coeffs))
        return ExtensionFieldElement(self, tuple(coeffs))

    def from_int(self, c) -> "ExtensionFieldElement":
        return self.element([c])

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def gen(self):
        if self.a == 1:
            # degenerate extension: the canonical modulus is t, so t = 0
            return self.zero()
        return self.element([0, 1])

    def elements(self):
        """All q elements, in lexicographic coefficient order."""
        for coeffs in itertools.product(range(self.p), repeat=self.a):
            yield ExtensionFieldElement(self, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and (self.p, self.a) == (other.p, other.a)
        )

    def __hash__(self):
        return hash((self.p, self.a))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, a={self.a})"


class ExtensionFieldElement:
    """Element of GF(p^a) in the polynomial basis (constant term first)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, ExtensionFieldElement) or other.field != self.field:
            raise ValueError("operands lie in different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return ExtensionFieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return ExtensionFieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return ExtensionFieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        p = self.field.p
        prod = _pmul(_ptrim(self.coeffs), _ptrim(other.coeffs), p)
        _, rem = _pdivmod(prod, self.field.modulus, p) if prod else ((), ())
        rem = list(rem) + [0] * (self.field.a - len(rem))
        return ExtensionFieldElement(self.field, tuple(rem))

    def inverse(self):
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if not any(self.coeffs):
            raise ZeroDivisionError("inversion of 0 in GF(q)")
        p = self.field.p
        r0, r1 = self.field.modulus, _ptrim(self.coeffs)
        s0, s1 = (), (1,)
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _ptrim(
                [
                    (a - b) % p
                    for a, b in itertools.zip_longest(
                        s0, _pmul(q, s1, p), fillvalue=0
                    )
                ]
            )
        # r0 is now a nonzero constant gcd
        inv_const = pow(r0[0], p - 2, p)
        res = [c * inv_const % p for c in s0]
        res += [0] * (self.field.a - len(res))
        return ExtensionFieldElement(self.field, tuple(res[: self.field.a]))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionFieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.a, self.coeffs))

    def canonical_str(self):
        if self.field.a == 1:
            return str(self.coeffs[0])
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"<GF({self.field.p}^{self.field.a}) {self.canonical_str()}>"
