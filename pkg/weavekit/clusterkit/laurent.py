"""Exact multivariate Laurent polynomials over the integers.

A Laurent polynomial is stored as a pair ``(numerator, shift)``: a sparse
polynomial from ``sympy.polys.rings`` that no variable divides, and an
integer exponent vector added to every monomial. Arithmetic happens on the
numerators, so products, sums and exact quotients reuse sympy's sparse
polynomial kernels.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..utils.errors import NonLaurentDivision


Monomial = Tuple[int, ...]

# Evaluation point for fingerprints: a Mersenne prime modulus and fixed
# residues, so fingerprints are reproducible across runs.
FINGERPRINT_PRIME = (1 << 61) - 1
_FINGERPRINT_BASE = 1_000_003


@lru_cache(maxsize=None)
def laurent_ring(m: int) -> PolyRing:
    """Polynomial ring ZZ[x1..xm] shared by all Laurent polynomials in m variables."""
    symbols = [f"x{i}" for i in range(1, m + 1)]
    return ring(symbols, ZZ)[0]


@lru_cache(maxsize=None)
def _fingerprint_point(m: int) -> Tuple[int, ...]:
    return tuple(pow(_FINGERPRINT_BASE, i + 2, FINGERPRINT_PRIME) for i in range(m))


class LaurentPoly:
    """Immutable Laurent polynomial in ``m`` variables with integer coefficients."""

    __slots__ = ("_num", "_shift", "_key", "_fingerprint", "_serial", "_hash")

    def __init__(self, numerator: PolyElement, shift: Sequence[int]) -> None:
        # Callers outside this module go through the classmethods below.
        self._num = numerator
        self._shift = tuple(shift)
        self._key: Optional[Tuple[Tuple[Monomial, int], ...]] = None
        self._fingerprint: Optional[int] = None
        self._serial: Optional[str] = None
        self._hash: Optional[int] = None

    # construction -------------------------------------------------------

    @classmethod
    def _normalized(cls, numerator: PolyElement, shift: Sequence[int]) -> "LaurentPoly":
        if not numerator:
            return cls(numerator, (0,) * len(shift))
        tail = numerator.tail_degrees()
        if any(tail):
            numerator = numerator.quo_term((tail, 1))
            shift = tuple(s + t for s, t in zip(shift, tail))
        return cls(numerator, shift)

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[Tuple[Sequence[int], int]]) -> "LaurentPoly":
        """Build from (exponent vector, coefficient) pairs; exponents may be negative."""
        collected: Dict[Monomial, int] = {}
        for exps, coef in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != m:
                raise ValueError(f"Exponent vector {exps} does not have length {m}")
            collected[exps] = collected.get(exps, 0) + int(coef)
        collected = {e: c for e, c in collected.items() if c}
        R = laurent_ring(m)
        if not collected:
            return cls(R.zero, (0,) * m)
        low = tuple(min(e[i] for e in collected) for i in range(m))
        shifted = {tuple(e[i] - low[i] for i in range(m)): c for e, c in collected.items()}
        return cls._normalized(R.from_dict(shifted), low)

    @classmethod
    def variable(cls, m: int, i: int) -> "LaurentPoly":
        """The initial variable x_i (1-based)."""
        if not 1 <= i <= m:
            raise ValueError(f"Variable index {i} out of range 1..{m}")
        return cls(laurent_ring(m).one, tuple(1 if j == i - 1 else 0 for j in range(m)))

    @classmethod
    def constant(cls, m: int, value: int) -> "LaurentPoly":
        return cls.from_terms(m, [((0,) * m, value)])

    @classmethod
    def monomial(cls, m: int, exps: Sequence[int]) -> "LaurentPoly":
        return cls(laurent_ring(m).one, tuple(exps))

    # accessors -----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self._shift)

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Canonical form: (exponent vector, coefficient) sorted lexicographically."""
        return list(self.key)

    @property
    def key(self) -> Tuple[Tuple[Monomial, int], ...]:
        if self._key is None:
            shift = self._shift
            self._key = tuple(sorted(
                (tuple(e + s for e, s in zip(monom, shift)), int(coef))
                for monom, coef in self._num.items()
            ))
        return self._key

    def serialize(self) -> str:
        """Compact canonical string, used inside cluster keys."""
        if self._serial is None:
            self._serial = ";".join(f"{coef}:{','.join(map(str, exps))}" for exps, coef in self.key)
        return self._serial

    def is_zero(self) -> bool:
        return not self._num

    def is_monomial(self) -> bool:
        return len(self._num) == 1

    def min_exponents(self) -> Tuple[int, ...]:
        """Minimal exponent of each variable over all monomials."""
        return self._shift

    def fingerprint(self) -> int:
        """Value modulo a large prime at a fixed point; equal polynomials agree."""
        if self._fingerprint is None:
            point = _fingerprint_point(self.nvars)
            p = FINGERPRINT_PRIME
            total = 0
            for exps, coef in self.key:
                value = coef % p
                for base, e in zip(point, exps):
                    if e:
                        value = value * pow(base, e, p) % p
                total = (total + value) % p
            self._fingerprint = total
        return self._fingerprint

    def permuted(self, perm: Sequence[int]) -> "LaurentPoly":
        """Substitute x_i -> x_{perm[i-1]} (1-based images)."""
        m = self.nvars
        terms = []
        for exps, coef in self.key:
            moved = [0] * m
            for i, e in enumerate(exps):
                moved[perm[i] - 1] = e
            terms.append((moved, coef))
        return LaurentPoly.from_terms(m, terms)

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        """Exact value at nonzero rationals."""
        total = Fraction(0)
        for exps, coef in self.key:
            term = Fraction(coef)
            for value, e in zip(values, exps):
                if e:
                    term *= Fraction(value) ** e
            total += term
        return total

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("Laurent polynomials live in different rings")

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        shift = tuple(a + b for a, b in zip(self._shift, other._shift))
        return LaurentPoly(self._num * other._num, shift)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = tuple(min(a, b) for a, b in zip(self._shift, other._shift))
        left = self._num.mul_monom(tuple(a - c for a, c in zip(self._shift, low)))
        right = other._num.mul_monom(tuple(b - c for b, c in zip(other._shift, low)))
        return LaurentPoly._normalized(left + right, low)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self._num, self._shift)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("Only monomials have Laurent inverses")
            (_, coef), = self._num.items()
            if abs(coef) != 1:
                raise ValueError("Monomial with non-unit coefficient has no inverse over ZZ")
            return LaurentPoly(self._num.ring(int(coef) ** (-exponent)),
                               tuple(exponent * s for s in self._shift))
        return LaurentPoly(self._num ** exponent, tuple(exponent * s for s in self._shift))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises NonLaurentDivision when it does not exist."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        try:
            quotient = self._num.exquo(other._num)
        except ExactQuotientFailed:
            raise NonLaurentDivision(f"({self}) is not divisible by ({other}) in the Laurent ring")
        shift = tuple(a - b for a, b in zip(self._shift, other._shift))
        return LaurentPoly._normalized(quotient, shift)

    # comparison -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self is other:
            return True
        return self.nvars == other.nvars and self.key == other.key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    # display ---------------------------------------------------------------

    def __str__(self) -> str:
        """Readable form such as ``(1 + x1 + x2)/(x1*x2)``."""
        if self.is_zero():
            return "0"
        up = tuple(max(s, 0) for s in self._shift)
        down = tuple(max(-s, 0) for s in self._shift)
        monoms = sorted(
            ((tuple(a + b for a, b in zip(monom, up)), int(coef)) for monom, coef in self._num.items()),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )
        pieces = []
        for exps, coef in monoms:
            factor = _format_monomial(exps)
            if factor == "1":
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = factor
            else:
                body = f"{abs(coef)}*{factor}"
            if not pieces:
                pieces.append(f"-{body}" if coef < 0 else body)
            else:
                pieces.append(f" - {body}" if coef < 0 else f" + {body}")
        text = "".join(pieces)
        if not any(down):
            return text
        if len(monoms) > 1:
            text = f"({text})"
        denominator = _format_monomial(down)
        if "*" in denominator or "^" in denominator:
            denominator = f"({denominator})"
        return f"{text}/{denominator}"

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> List[Dict[str, object]]:
        return [{"coef": coef, "exp": list(exps)} for exps, coef in self.key]

    @classmethod
    def from_json(cls, m: int, data: List[Dict[str, object]]) -> "LaurentPoly":
        return cls.from_terms(m, ((item["exp"], item["coef"]) for item in data))


def _format_monomial(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def monomial_product(factors: Iterable[Tuple[LaurentPoly, int]], m: int) -> LaurentPoly:
    """Product of powers ``v**e`` for nonnegative exponents."""
    result = LaurentPoly.constant(m, 1)
    for value, exponent in factors:
        if exponent:
            result = result * (value ** exponent)
    return result
