"""Formal derivative and antiderivatives in F[x] for F = Q or GF(p).

Polynomials are coefficient tuples, lowest degree first, with trailing
zeros stripped; the zero polynomial is ``()``. Arithmetic is exact:
``fractions.Fraction`` over Q and residues in ``range(p)`` over GF(p).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import BoundTooSmall, NotIntegrable

DEFAULT_DEGREE_BOUND = 8

Number = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Rationals:
    char = 0

    def coerce(self, v) -> Fraction:
        if isinstance(v, str):
            v = v.strip()
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError, TypeError):
            raise ValueError(f"not a rational number: {v!r}") from None

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / a

    def elements(self):
        raise TypeError("Q is infinite")

    def format(self, a: Fraction) -> str:
        return str(a)

    def __repr__(self):
        return "Q"


class PrimeField:
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p!r}")
        self.char = p

    def coerce(self, v) -> int:
        p = self.char
        if isinstance(v, str):
            v = v.strip()
            if "/" in v:
                num, den = v.split("/", 1)
                return self.mul(self.coerce(num), self.inv(self.coerce(den)))
            try:
                v = int(v)
            except ValueError:
                raise ValueError(f"not an integer residue: {v!r}") from None
        if isinstance(v, Fraction):
            return self.mul(v.numerator % p, self.inv(v.denominator % p))
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"not an integer residue: {v!r}")
        return v % p

    def from_int(self, k: int) -> int:
        return k % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def neg(self, a):
        return -a % self.char

    def mul(self, a, b):
        return a * b % self.char

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.char}")
        return pow(a, -1, self.char)

    def elements(self) -> range:
        return range(self.char)

    def format(self, a: int) -> str:
        return str(a)

    def __repr__(self):
        return f"GF({self.char})"


@functools.lru_cache(maxsize=None)
def field_for(char: int):
    return Rationals() if char == 0 else PrimeField(char)


class Polynomial:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), char: int = 0):
        self.field = field_for(char)
        cs = [self.field.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, char: int = 0, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff], char)

    @classmethod
    def parse(cls, text: str, char: int = 0) -> "Polynomial":
        """Read ``"a0 a1 a2 ..."`` (low degree first; rationals as ``num/den``)."""
        return cls(text.split(), char)

    @property
    def char(self) -> int:
        return self.field.char

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.from_int(0)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "Polynomial"):
        if other.char != self.char:
            raise ValueError(f"characteristics differ: {self.char} vs {other.char}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([F.add(self[i], other[i]) for i in range(n)], self.char)

    def __neg__(self) -> "Polynomial":
        return Polynomial([self.field.neg(c) for c in self.coeffs], self.char)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        F = self.field
        if not isinstance(other, Polynomial):
            k = F.coerce(other)
            return Polynomial([F.mul(k, c) for c in self.coeffs], self.char)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial((), self.char)
        out = [F.from_int(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(out, self.char)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial([1], self.char)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.char == other.char and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.char, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, char={self.char})"

    def __str__(self):
        return render(self)

    def to_text(self) -> str:
        return " ".join(self.field.format(c) for c in self.coeffs) or "0"

    def derivative(self) -> "Polynomial":
        F = self.field
        return Polynomial(
            [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:], self.char
        )


def _monomial_text(i: int) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return "x"
    return f"x^{i}"


def render(p: Polynomial) -> str:
    """Human-readable form, highest degree first: ``3 x^2 + 2 x + 1``."""
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        cs = p.field.format(c)
        if i == 0:
            terms.append(cs)
        elif cs == "1":
            terms.append(_monomial_text(i))
        else:
            terms.append(f"{cs} {_monomial_text(i)}")
    return " + ".join(terms) if terms else "0"


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def _forbidden(i: int, char: int) -> bool:
    """Is x^i outside the image of d? (only when i ≡ -1 mod p)"""
    return char != 0 and (i + 1) % char == 0


def is_integrable(p: Polynomial) -> bool:
    return all(c == 0 or not _forbidden(i, p.char) for i, c in enumerate(p.coeffs))


@dataclass(frozen=True)
class ConstantSpace:
    """Kernel of d: F itself in characteristic 0, else span{x^(kp)}."""

    char: int

    def __contains__(self, q: Polynomial) -> bool:
        if self.char == 0:
            return (q.degree or 0) == 0
        return all(c == 0 for i, c in enumerate(q.coeffs) if i % self.char)

    def degrees(self, bound: int) -> list[int]:
        if self.char == 0:
            return [0]
        return list(range(0, bound + 1, self.char))

    def describe(self) -> str:
        if self.char == 0:
            return "F"
        p = self.char
        return f"span{{1, x^{p}, x^{2 * p}, ...}}"


@dataclass(frozen=True)
class IntegralDescription:
    """``I_d(p) = particular + constant_space``."""

    particular: Polynomial
    constant_space: ConstantSpace

    def __contains__(self, q: Polynomial) -> bool:
        return (q - self.particular) in self.constant_space

    def render(self) -> str:
        return f"{render(self.particular)} + C, C ∈ {self.constant_space.describe()}"


def constants_description(char: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> ConstantSpace:
    field_for(char)
    space = ConstantSpace(char)
    for i in space.degrees(degree_bound):
        mono = Polynomial.monomial(i, char)
        assert not poly_derivative(mono), f"x^{i} is not a constant"
        assert is_integrable(mono), f"constant x^{i} is not integrable"
    return space


def poly_integrate(p: Polynomial) -> IntegralDescription:
    """The antiderivative with every free (constant-space) coefficient set to 0."""
    F = p.field
    out = [F.from_int(0)]
    for i, c in enumerate(p.coeffs):
        if _forbidden(i, p.char):
            if c != 0:
                raise NotIntegrable(i, p.char)
            out.append(F.from_int(0))
        else:
            out.append(F.mul(c, F.inv(F.from_int(i + 1))))
    particular = Polynomial(out, p.char)
    assert poly_derivative(particular) == p
    return IntegralDescription(particular, ConstantSpace(p.char))


class BoundedIntegralSet:
    """``{q : deg q <= D, d(q) = p}``: a particular solution plus free coefficients.

    Over GF(p) the set is finite and iterable; over Q it is a one-parameter
    family (the constant term) and only membership can be asked.
    """

    def __init__(self, particular: Optional[Polynomial], free_degrees: Sequence[int], char: int):
        self.particular = particular
        self.free_degrees = tuple(free_degrees) if particular is not None else ()
        self.char = char

    def __bool__(self) -> bool:
        return self.particular is not None

    def __len__(self) -> int:
        if self.particular is None:
            return 0
        if self.char == 0:
            raise TypeError("integral set over Q is infinite")
        return self.char ** len(self.free_degrees)

    def __contains__(self, q: Polynomial) -> bool:
        if self.particular is None or q.char != self.char:
            return False
        diff = q - self.particular
        return all(c == 0 or i in self.free_degrees for i, c in enumerate(diff.coeffs))

    def __iter__(self) -> Iterator[Polynomial]:
        if self.particular is None:
            return
        if self.char == 0:
            raise TypeError("integral set over Q is infinite")
        base = list(self.particular.coeffs) + [0] * (max(self.free_degrees, default=0) + 1)
        for values in product(range(self.char), repeat=len(self.free_degrees)):
            cs = list(base)
            for deg, v in zip(self.free_degrees, values):
                cs[deg] = (cs[deg] + v) % self.char
            yield Polynomial(cs, self.char)


def bounded_integral_set(p: Polynomial, degree_bound: int) -> BoundedIntegralSet:
    """Solve ``d(q) = p`` for ``deg q <= degree_bound`` one coefficient at a time."""
    deg = p.degree if p.degree is not None else -1
    if degree_bound < deg + 1:
        raise BoundTooSmall(f"degree bound {degree_bound} < deg(p)+1 = {deg + 1}")
    F = p.field
    q = [F.from_int(0)] * (degree_bound + 1)
    free = [0]
    for i in range(degree_bound):
        # coefficient of x^i in d(q) is (i+1)·q[i+1]
        k = F.from_int(i + 1)
        if k == 0:
            if p[i] != 0:
                return BoundedIntegralSet(None, (), p.char)
            free.append(i + 1)
        else:
            q[i + 1] = F.mul(p[i], F.inv(k))
    return BoundedIntegralSet(Polynomial(q, p.char), free, p.char)


def closure_condition_poly(
    char: int, degree_bound: int = DEFAULT_DEGREE_BOUND
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Is Int_d(F[x]) closed under products, probed on monomials up to ``degree_bound``?

    Int_d is spanned by its monomials and the product is bilinear, so
    monomial pairs decide it. Returns the first exponent pair (i, j) with
    x^i, x^j integrable but x^(i+j) not.
    """
    field_for(char)
    if char >= 3 and degree_bound < char:
        raise BoundTooSmall(f"degree bound {degree_bound} must be >= p = {char}")
    if degree_bound < 0:
        raise BoundTooSmall("degree bound must be non-negative")
    integrable = [is_integrable(Polynomial.monomial(i, char)) for i in range(degree_bound + 1)]
    for i, j in product(range(degree_bound + 1), repeat=2):
        if integrable[i] and integrable[j]:
            prod = Polynomial.monomial(i, char) * Polynomial.monomial(j, char)
            if not is_integrable(prod):
                return False, (i, j)
    return True, None


def render_closure_witness(witness: tuple[int, int]) -> str:
    i, j = witness
    return f"{_monomial_text(i)} · x^{j}"
