"""Exact coefficient fields: the rationals and prime fields.

Polynomials store raw coefficient values for speed: ``Fraction`` for the
rationals and plain ``int`` in ``[0, p)`` for a prime field.  The field
object knows how to build, combine and print those raw values.  For
user-facing arithmetic a prime-field value can be wrapped in an
:class:`FpElement`, which refuses to mix with values of another field.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, MixedFieldError, NotPrime, ParseError

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "FpElement",
    "QQ",
    "GF",
    "DEFAULT_PRIME",
    "is_prime",
    "field_arith",
    "recip",
    "field_of",
]

DEFAULT_PRIME = 32003

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 3.3e24, which covers every 64-bit modulus; above
    that the fixed witness set makes it a strong probable-prime test.
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Interface implemented by :class:`RationalField` and :class:`PrimeField`.

    ``mod`` is ``None`` for characteristic zero, else the prime; the
    arithmetic kernels branch on it instead of calling methods per term.
    """

    mod: int | None = None
    zero: object
    one: object

    def convert(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def element(self, value):
        """Wrap ``value`` as a public field element."""
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def add(self, a, b):
        return a + b if self.mod is None else (a + b) % self.mod

    def sub(self, a, b):
        return a - b if self.mod is None else (a - b) % self.mod

    def mul(self, a, b):
        return a * b if self.mod is None else (a * b) % self.mod

    def neg(self, a):
        return -a if self.mod is None else (-a) % self.mod

    def div(self, a, b):
        return self.mul(a, self.inv(b))


class RationalField(Field):
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    mod = None
    zero = Fraction(0)
    one = Fraction(1)
    name = "Q"

    def convert(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, FpElement):
            raise MixedFieldError(f"cannot use {value!r} as a rational")
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to a rational")

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                den = int(den)
                if den == 0:
                    raise DivisionByZero("zero denominator in rational literal")
                return Fraction(int(num), den)
            return Fraction(int(text))
        except ValueError:
            raise ParseError(f"bad rational literal {text!r}") from None

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("reciprocal of zero")
        return 1 / Fraction(a)

    def element(self, value):
        return self.convert(value)

    def format(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (RationalField, ())


class PrimeField(Field):
    """The prime field of integers modulo ``p``; primality is checked once."""

    _cache: dict[int, "PrimeField"] = {}

    def __new__(cls, p: int):
        p = int(p)
        field = cls._cache.get(p)
        if field is None:
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
            field = super().__new__(cls)
            field.mod = p
            field.zero = 0
            field.one = 1
            field.name = f"fp:{p}"
            cls._cache[p] = field
        return field

    def convert(self, value):
        p = self.mod
        if isinstance(value, FpElement):
            if value.field is not self:
                raise MixedFieldError(f"cannot mix GF({value.field.mod}) and GF({p})")
            return value.value
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GF({p})")

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return int(num) * self.inv(int(den)) % self.mod
            return int(text) % self.mod
        except ValueError:
            raise ParseError(f"bad integer literal {text!r}") from None

    def inv(self, a):
        a %= self.mod
        if a == 0:
            raise DivisionByZero("reciprocal of zero")
        # extended Euclid
        r0, r1, s0, s1 = self.mod, a, 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % self.mod

    def element(self, value):
        return FpElement(self.convert(value), self)

    def format(self, a):
        # symmetric residues read better and parse back to the same value
        return str(a - self.mod if a > self.mod // 2 else a)

    def __repr__(self):
        return f"GF({self.mod})"

    def __reduce__(self):
        return (PrimeField, (self.mod,))


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


class FpElement:
    """An immutable element of a prime field."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value % field.mod)

    def __setattr__(self, name, value):
        raise AttributeError("FpElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field is not self.field:
                raise MixedFieldError(f"cannot mix GF({self.field.mod}) and GF({other.field.mod})")
            return other.value
        if isinstance(other, int):
            return other % self.field.mod
        if isinstance(other, Fraction):
            raise MixedFieldError("cannot mix a rational with a prime-field element")
        return NotImplemented

    def _wrap(self, v):
        return FpElement(v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * self.field.inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o * self.field.inv(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return self.recip() ** (-k)
        return self._wrap(pow(self.value, k, self.field.mod))

    def recip(self):
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.mod
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.mod))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, GF({self.field.mod}))"

    def __str__(self):
        return str(self.value)


def field_of(a) -> Field:
    if isinstance(a, FpElement):
        return a.field
    if isinstance(a, (int, Fraction)):
        return QQ
    raise TypeError(f"{a!r} is not a field element")


def field_arith(op: str, a, b=None):
    """Apply ``op`` in {'add', 'sub', 'mul', 'neg'} to field elements.

    Raises MixedFieldError when ``a`` and ``b`` come from different fields.
    """
    fa = field_of(a)
    if op == "neg":
        return -Fraction(a) if fa is QQ else -a
    fb = field_of(b)
    if fa is not fb:
        raise MixedFieldError(f"{fa!r} vs {fb!r}")
    if fa is QQ:
        a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def recip(a):
    """Multiplicative inverse; DivisionByZero on zero."""
    f = field_of(a)
    if f is QQ:
        return f.inv(Fraction(a))
    return a.recip()


def parse_field(text: str) -> Field:
    """Parse ``q``/``Q``/``QQ`` or ``fp:<p>`` / ``GF(p)`` / ``F<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    for prefix in ("fp:", "gf:", "f"):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return PrimeField(int(t[len(prefix):]))
    if t.startswith("gf(") and t.endswith(")") and t[3:-1].isdigit():
        return PrimeField(int(t[3:-1]))
    raise ParseError(f"unknown field {text!r}")
