"""Finite fields GF(p^m) for p^m <= 2^16.

Elements are handled as canonical integers in ``[0, q)``: the base-p digits
of the integer are the coefficients (low to high) of the residue polynomial
modulo the field's defining polynomial. Prime fields use plain modular
arithmetic; extension fields use log/antilog tables built once per context.

Every field multiplication and division is tallied in ``mult_counter`` so
that polynomial algorithms built on top can report exact operation counts.
Vector kernels (``scale_vec``, ``convolve``, ...) bump the counter in bulk by
exactly the number of products they form.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) as low-to-high int lists (construction helpers) --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    r = list(a)
    _trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        _trim(r)
    return r


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg/2 divides ``modulus``."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _pmod(modulus, list(tail) + [1], p):
                return False
    return True


def _int_to_digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _digits_to_int(d: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(d)):
        v = v * p + c
    return v


def default_modulus(p: int, m: int) -> list[int]:
    """First monic irreducible of degree ``m`` over GF(p).

    Candidates ``x^m + t(x)`` are scanned with ``t`` ascending in the
    canonical integer encoding.
    """
    for t in range(p**m):
        cand = _int_to_digits(t, p, m) + [1]
        if _is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {m} over GF({p})")  # pragma: no cover


class FieldCtx:
    """The field GF(p^m).

    >>> F = FieldCtx(7)
    >>> F.mul(6, 6), F.inv(6), F.add(2, 6)
    (1, 6, 1)
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise FieldTooLarge(f"GF({p}^{m}) exceeds the 2^16 element cap")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus:
                raise ReducibleModulus("prime fields take no modulus")
            self.modulus: tuple[int, ...] = ()
        else:
            if modulus is None:
                mod = default_modulus(p, m)
            else:
                mod = [c % p for c in modulus]
                if len(mod) != m + 1 or mod[-1] == 0:
                    raise ReducibleModulus(f"modulus must have degree {m}")
                inv_lead = pow(mod[-1], p - 2, p)
                mod = [c * inv_lead % p for c in mod]
                if not _is_irreducible(mod, p):
                    raise ReducibleModulus(f"{mod} is reducible over GF({p})")
            self.modulus = tuple(mod)
            self._build_tables()
        self.mult_counter = 0
        self.inv_counter = 0

    # -- construction --------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = _int_to_digits(a, p, m), _int_to_digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return _digits_to_int(_pmod(prod, self.modulus, p), p)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        for g in range(2, q):
            if all(self._slow_pow(g, order // f) != 1 for f in factors):
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise RuntimeError("no primitive element found")
        self.generator = g
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        if self.p != 2:
            # Zech logarithms: 1 + g^t = g^zech[t]; -1 when the sum is zero.
            p = self.p
            zech = [0] * order
            for t in range(order):
                e = exp[t]
                lo = e % p
                s = e - lo + (lo + 1) % p
                zech[t] = log[s] if s else -1
            self._zech = zech

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- identity ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def reset_counters(self) -> None:
        self.mult_counter = 0
        self.inv_counter = 0

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")
        return a

    # -- scalar arithmetic ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2 or a == 0:
            return a
        return self._exp[self._log[a] + (self.q - 1) // 2]

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def _mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def mul(self, a: int, b: int) -> int:
        self.mult_counter += 1
        return self._mul(a, b)

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1) - self._log[a]]

    def inv(self, a: int) -> int:
        self.inv_counter += 1
        return self._inv(a)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            # square-and-multiply count, to keep the tally honest
            self.mult_counter += e.bit_length() - 1 + bin(e).count("1") - 1
            return pow(a, e, self.p)
        self.mult_counter += e.bit_length() - 1 + bin(e).count("1") - 1
        return self._exp[self._log[a] * e % (self.q - 1)]

    # -- vector kernels (coefficient lists, low to high) ---------------

    def add_vec(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        if self.m == 1:
            p = self.p
            for i, y in enumerate(b):
                out[i] = (out[i] + y) % p
        elif self.p == 2:
            for i, y in enumerate(b):
                out[i] ^= y
        else:
            add = self.add
            for i, y in enumerate(b):
                out[i] = add(out[i], y)
        return out

    def neg_vec(self, a: Sequence[int]) -> list[int]:
        if self.m == 1:
            p = self.p
            return [-x % p for x in a]
        neg = self.neg
        return [neg(x) for x in a]

    def scale_vec(self, c: int, a: Sequence[int]) -> list[int]:
        self.mult_counter += len(a)
        if self.m == 1:
            p = self.p
            return [c * x % p for x in a]
        if c == 0:
            return [0] * len(a)
        exp, log = self._exp, self._log
        lc = log[c]
        return [exp[lc + log[x]] if x else 0 for x in a]

    def axpy(self, c: int, x: Sequence[int], y: Sequence[int], shift: int = 0) -> list[int]:
        """Return ``y + c * x * X^shift`` as a coefficient list."""
        self.mult_counter += len(x)
        n = max(len(y), len(x) + shift)
        out = list(y) + [0] * (n - len(y))
        if self.m == 1:
            p = self.p
            for i, xi in enumerate(x, shift):
                out[i] = (out[i] + c * xi) % p
            return out
        if c == 0:
            return out
        exp, log, add = self._exp, self._log, self.add
        lc = log[c]
        for i, xi in enumerate(x, shift):
            if xi:
                out[i] = add(out[i], exp[lc + log[xi]])
        return out

    def convolve(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Schoolbook product; always forms ``len(a) * len(b)`` products."""
        if not a or not b:
            return []
        self.mult_counter += len(a) * len(b)
        out = [0] * (len(a) + len(b) - 1)
        if self.m == 1:
            p = self.p
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return [v % p for v in out]
        exp, log, add = self._exp, self._log, self.add
        for i, x in enumerate(a):
            if x:
                lx = log[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], exp[lx + log[y]])
        return out


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def parse_field(spec: str) -> FieldCtx:
    """Parse ``"7"``, ``"2^8"`` or ``"3^2"`` into a field context."""
    base, _, exp = spec.partition("^")
    return FieldCtx(int(base), int(exp) if exp else 1)


class FieldElement:
    """A field element bound to its context, with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldCtx, value: int):
        self.field = field
        self.value = field.check(value)

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"
