"""Exact coefficient arithmetic.

Two coefficient domains, both exact (no floating point anywhere):

* ``Scalar`` -- the Laurent ring K = Q(w)[q^{+-1}], where w is a primitive
  cube root of unity (reduced via w^2 = -1 - w) and q is a free unit.  The
  derived unit q2 := -w * q^{-1} satisfies -q*q2 = w.  Inversion is partial:
  only monomials u*q^k with u != 0 in Q(w) are units.
* ``CyclotomicNumber`` -- the field Q(zeta_n), elements represented modulo
  the n-th cyclotomic polynomial.  A genuine field: every nonzero element
  is invertible.

``Specialization`` maps Scalars into a cyclotomic field by sending q to a
root of unity and w to a primitive cube root.

Both domains satisfy the duck-typed coefficient protocol the rewriting
engine relies on: ``+``, ``-``, ``*``, unary ``-``, ``==``, ``is_zero()``,
``is_one()`` and ``inverse()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "NotAUnit",
    "Scalar",
    "CyclotomicNumber",
    "Specialization",
    "parse_scalar",
]


class NotAUnit(ArithmeticError):
    """Raised when inverting a Scalar that is not a monomial unit."""


_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Scalar:
    """Element of Q(w)[q^{+-1}] as a map {exponent of q: (a, b)} for a + b*w.

    Canonical form: zero pairs are never stored, so the zero scalar has an
    empty map.  Instances are immutable and hashable.
    """

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, (a, b) in coeffs.items():
                a = _as_fraction(a)
                b = _as_fraction(b)
                if a or b:
                    c[int(k)] = (a, b)
        self.c = c
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls({0: (_F1, _F0)})

    @classmethod
    def of(cls, r) -> "Scalar":
        """Scalar from an exact rational."""
        return cls({0: (_as_fraction(r), _F0)})

    @classmethod
    def monomial(cls, k: int, a=1, b=0) -> "Scalar":
        """(a + b*w) * q^k."""
        return cls({k: (_as_fraction(a), _as_fraction(b))})

    @classmethod
    def omega(cls) -> "Scalar":
        return cls({0: (_F0, _F1)})

    @classmethod
    def q(cls, k: int = 1) -> "Scalar":
        return cls({k: (_F1, _F0)})

    @classmethod
    def q2(cls, k: int = 1) -> "Scalar":
        """(-w * q^{-1})^k."""
        return cls.monomial(-1, 0, -1) ** k

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == {0: (_F1, _F0)}

    def is_unit(self) -> bool:
        return len(self.c) == 1

    def is_rational(self) -> bool:
        return not self.c or (len(self.c) == 1 and 0 in self.c and not self.c[0][1])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.c:
            return other
        if not other.c:
            return self
        c = dict(self.c)
        for k, (a, b) in other.c.items():
            if k in c:
                a2, b2 = c[k]
                a2 += a
                b2 += b
                if a2 or b2:
                    c[k] = (a2, b2)
                else:
                    del c[k]
            else:
                c[k] = (a, b)
        out = Scalar.__new__(Scalar)
        out.c = c
        out._hash = None
        return out

    def __neg__(self) -> "Scalar":
        out = Scalar.__new__(Scalar)
        out.c = {k: (-a, -b) for k, (a, b) in self.c.items()}
        out._hash = None
        return out

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        sc, oc = self.c, other.c
        if not sc or not oc:
            return Scalar()
        c = {}
        # (a1 + b1 w)(a2 + b2 w) = a1 a2 - b1 b2 + (a1 b2 + b1 a2 - b1 b2) w
        for k1, (a1, b1) in sc.items():
            for k2, (a2, b2) in oc.items():
                k = k1 + k2
                bb = b1 * b2
                a = a1 * a2 - bb
                b = a1 * b2 + b1 * a2 - bb
                if k in c:
                    a0, b0 = c[k]
                    a += a0
                    b += b0
                if a or b:
                    c[k] = (a, b)
                elif k in c:
                    del c[k]
        out = Scalar.__new__(Scalar)
        out.c = c
        out._hash = None
        return out

    def inverse(self) -> "Scalar":
        if len(self.c) != 1:
            raise NotAUnit(f"not a monomial unit: {self}")
        ((k, (a, b)),) = self.c.items()
        n = a * a - a * b + b * b  # norm of a + b*w over Q
        return Scalar({-k: ((a - b) / n, -b / n)})

    def __pow__(self, n: int) -> "Scalar":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Scalar.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing --------------------------------------------

    def key(self):
        """Canonical hashable form (sorted by exponent)."""
        return tuple(sorted(self.c.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({render_scalar(self)!r})"


def _render_qw(a: Fraction, b: Fraction) -> str:
    if not b:
        return str(a)
    wpart = f"{b}*w"
    if not a:
        return wpart
    if b > 0:
        return f"{a}+{wpart}"
    return f"{a}-{-b}*w"


def render_scalar(s: Scalar) -> str:
    """Grammar per term: [-]c0[+c1*w][*q^k]; composite coefficients of a
    q-power are parenthesized so the rendering parses back unambiguously."""
    if not s.c:
        return "0"
    parts = []
    for k in sorted(s.c):
        a, b = s.c[k]
        base = _render_qw(a, b)
        if k == 0:
            parts.append(base)
        elif base == "1":
            parts.append(f"q^{k}")
        elif base == "-1":
            parts.append(f"-q^{k}")
        elif ("+" in base) or ("-" in base.lstrip("-")) or base.startswith("-"):
            parts.append(f"({base})*q^{k}")
        else:
            parts.append(f"{base}*q^{k}")
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def monomial_triple(c):
    """(a, b, k) for a single-term Scalar (a + b*w)*q^k, ints preferred;
    None when the scalar has several terms or is not a Scalar."""
    if not isinstance(c, Scalar) or len(c.c) != 1:
        return None
    ((k, (a, b)),) = c.c.items()
    if a.denominator == 1:
        a = a.numerator
    if b.denominator == 1:
        b = b.numerator
    return (a, b, k)


def scalar_from_triple(t) -> Scalar:
    a, b, k = t
    return Scalar({k: (_as_fraction(a), _as_fraction(b))})


class _ScalarParser:
    """Recursive-descent parser for the scalar grammar.

    sum     := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := rational | 'w' | 'q' ['^' int] | '(' sum ')' | '-' factor
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ValueError(f"scalar parse error at {self.pos}: {msg} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Scalar:
        v = self.sum()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return v

    def sum(self) -> Scalar:
        v = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self) -> Scalar:
        v = self.factor()
        while self.peek() == "*":
            self.pos += 1
            v = v * self.factor()
        return v

    def factor(self) -> Scalar:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "(":
            self.pos += 1
            v = self.sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return v
        if ch == "w":
            self.pos += 1
            return Scalar.omega()
        if ch == "q":
            self.pos += 1
            k = 1
            if self.peek() == "^":
                self.pos += 1
                k = self.integer()
            return Scalar.q(k)
        if ch.isdigit():
            return Scalar.of(self.rational())
        self.error(f"unexpected {ch!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            return Fraction(num, den)
        return Fraction(num)


def parse_scalar(text: str) -> Scalar:
    return _ScalarParser(text).parse()


# ---------------------------------------------------------------------------
# Cyclotomic fields Q(zeta_n)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (ascending) of the n-th cyclotomic polynomial over Q.

    Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d(x).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    num = [_F0] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = _F1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [_F0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / den[dd]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_table(n: int):
    """x^m mod Phi_n for m in [deg, 2*deg - 2], as tuples of length deg."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    # x^deg = -(phi minus leading term)   (Phi_n is monic)
    table = []
    cur = [-c for c in phi[:deg]]
    table.append(tuple(cur))
    for _ in range(deg - 2):
        cur = [_F0] + cur
        top = cur.pop()
        if top:
            red = table[0]
            cur = [c + top * r for c, r in zip(cur, red)]
        table.append(tuple(cur))
    return deg, tuple(table)


class CyclotomicNumber:
    """Element of Q(zeta_n), coordinates in the power basis 1..zeta^{d-1}."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs=None):
        deg, _ = _reduction_table(n)
        c = [_F0] * deg
        if coeffs:
            if len(coeffs) > deg:
                raise ValueError(f"{len(coeffs)} coordinates exceed degree {deg} of Q(zeta_{n})")
            for i, v in enumerate(coeffs):
                c[i] = _as_fraction(v)
        self.n = n
        self.c = tuple(c)
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> "CyclotomicNumber":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CyclotomicNumber":
        return cls(n, [1])

    @classmethod
    def of(cls, n: int, r) -> "CyclotomicNumber":
        return cls(n, [_as_fraction(r)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_n^k."""
        k %= n
        deg, _ = _reduction_table(n)
        if k < deg:
            coeffs = [_F0] * deg
            coeffs[k] = _F1
            return cls(n, coeffs)
        if deg == 1:
            phi = cyclotomic_polynomial(n)
            z = cls.of(n, -phi[0])  # x == -phi[0] mod a monic linear Phi_n
        else:
            z = cls(n, [0, 1])
        return z ** k

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and not any(self.c[1:])

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"mixed cyclotomic orders {self.n} and {other.n}")

    def __add__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        self._check(other)
        out = CyclotomicNumber.__new__(CyclotomicNumber)
        out.n = self.n
        out.c = tuple(a + b for a, b in zip(self.c, other.c))
        out._hash = None
        return out

    def __neg__(self):
        out = CyclotomicNumber.__new__(CyclotomicNumber)
        out.n = self.n
        out.c = tuple(-a for a in self.c)
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        self._check(other)
        deg, table = _reduction_table(self.n)
        prod = [_F0] * (2 * deg - 1)
        sc, oc = self.c, other.c
        for i, a in enumerate(sc):
            if a:
                for j, b in enumerate(oc):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:deg])
        for m in range(deg, 2 * deg - 1):
            v = prod[m]
            if v:
                red = table[m - deg]
                for i in range(deg):
                    if red[i]:
                        out[i] += v * red[i]
        res = CyclotomicNumber.__new__(CyclotomicNumber)
        res.n = self.n
        res.c = tuple(out)
        res._hash = None
        return res

    def inverse(self) -> "CyclotomicNumber":
        """Extended Euclid against Phi_n; Q(zeta_n) is a field."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi = list(cyclotomic_polynomial(self.n))
        a = list(self.c)
        while a and not a[-1]:
            a.pop()
        # Bezout: s1 * a == gcd (mod phi); Phi_n irreducible so gcd is a constant.
        r0, r1 = phi, a
        s0, s1 = [_F0], [_F1]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if not r1:
                raise ArithmeticError("gcd degenerate: Phi_n not coprime to element")
        const = r1[0]
        _, inv = _poly_divmod([c / const for c in s1], phi)
        return CyclotomicNumber(self.n, inv)

    def __pow__(self, k: int) -> "CyclotomicNumber":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = CyclotomicNumber.one(self.n)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def multiplicative_order(self, bound: int | None = None):
        """Order as a root of unity, or None if not one (search bounded)."""
        if bound is None:
            bound = 2 * self.n
        x = self
        for k in range(1, bound + 1):
            if x.is_one():
                return k
            x = x * self
        return None

    def key(self):
        return (self.n, self.c)

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicNumber)
            and self.n == other.n
            and self.c == other.c
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __str__(self):
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            if i == 0:
                parts.append(str(a))
            elif i == 1:
                parts.append(f"{a}*z")
            else:
                parts.append(f"{a}*z^{i}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CyclotomicNumber(n={self.n}, {self})"


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    while b and not b[-1]:
        b = b[:-1]
        db -= 1
    q = [_F0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / b[db]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while a and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a, b):
    out = [_F0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    out = list(a) + [_F0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


class Specialization:
    """Ring map K -> Q(zeta_n): q -> a root of unity, w -> a primitive cube root.

    The derived unit q2 = -w/q then lands on -omega_image * q1_image^{-1},
    keeping -q*q2 = w true after specialization.
    """

    def __init__(self, n: int, q1_image: CyclotomicNumber, omega_image: CyclotomicNumber | None = None):
        if n % 3 != 0:
            raise ValueError("cyclotomic order must be divisible by 3 to host w")
        if omega_image is None:
            omega_image = CyclotomicNumber.zeta(n, n // 3)
        if omega_image.n != n or q1_image.n != n:
            raise ValueError("images must live in Q(zeta_n)")
        if omega_image.multiplicative_order() != 3:
            raise ValueError("omega image must be a primitive cube root of unity")
        if q1_image.multiplicative_order() is None:
            raise ValueError("q1 image must be a root of unity")
        self.n = n
        self.q1_image = q1_image
        self.omega_image = omega_image
        self._q1_inv = q1_image.inverse()

    @classmethod
    def q1_to_omega(cls, n: int = 12) -> "Specialization":
        """The default lifting testbed: q -> w inside Q(zeta_n)."""
        om = CyclotomicNumber.zeta(n, n // 3)
        return cls(n, om, om)

    def q2_image(self) -> CyclotomicNumber:
        return -(self.omega_image * self._q1_inv)

    def apply(self, s: Scalar) -> CyclotomicNumber:
        out = CyclotomicNumber.zero(self.n)
        for k, (a, b) in s.c.items():
            coeff = CyclotomicNumber.of(self.n, a) + CyclotomicNumber.of(self.n, b) * self.omega_image
            qpow = (self.q1_image if k >= 0 else self._q1_inv) ** abs(k)
            out = out + coeff * qpow
        return out

    def __repr__(self):
        return f"Specialization(n={self.n}, q1 -> {self.q1_image})"
