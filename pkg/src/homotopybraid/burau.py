"""Unreduced Burau representation over Z[t, t^-1], exactly.

Matrices act with rows as images: row i holds the coordinates of the image
of the basis vector w_i, and a word maps to the ordinary matrix product of
its letters read left to right, so sigma_i sends

    w_i -> (1 - t) w_i + t w_{i+1},    w_{i+1} -> w_i,

and the images of the pure braid generators a_12 = s1^2, a_13 = s2 s1^2
s2^-1, a_23 = s2^2 on three strands come out in the usual closed forms.
At t = 1 every generator specializes to the permutation matrix of its
transposition.

The obstruction system: factoring the representation through the homotopy
braid group on three strands would force [a13, a13^{a23}] and
[a23, a23^{a13}] to map to the identity.  The entrywise differences of the
two products are Laurent polynomials whose only common rational root is
t = 1, so no such factoring exists away from that specialization; at t = 1
the pure part dies and the image is the symmetric group of order 6.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .braidword import BraidWord, pure_gen


class LaurentPoly:
    """Sparse integer Laurent polynomial in t: exponent -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def t(exponent: int = 1, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for k, c in terms:
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, m: int) -> "LaurentPoly":
        if m < 0:
            raise ValueError("negative powers are defined only for units")
        result = LaurentPoly.one()
        for _ in range(m):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Units of Z[t, t^-1] are +-t^k."""
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def min_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self.coeffs)

    def evaluate(self, t0: Fraction | int) -> Fraction:
        t0 = Fraction(t0)
        if t0 == 0 and any(k < 0 for k in self.coeffs):
            raise ZeroDivisionError("Laurent polynomial has a pole at t = 0")
        return sum((c * t0 ** k for k, c in self.coeffs.items()), Fraction(0))

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{k}" for k, c in self.terms())


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Whether p = +-t^k q for some k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    shifted = q.shift(p.min_exponent() - q.min_exponent())
    return p == shifted or p == -shifted


BurauMatrix = tuple[tuple[LaurentPoly, ...], ...]


def identity_matrix(n: int) -> BurauMatrix:
    return tuple(
        tuple(LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n))
        for i in range(n)
    )


def mat_mul(m1: BurauMatrix, m2: BurauMatrix) -> BurauMatrix:
    n = len(m1)
    return tuple(
        tuple(
            sum((m1[i][k] * m2[k][j] for k in range(n)), LaurentPoly.zero())
            for j in range(n)
        )
        for i in range(n)
    )


def mat_sub(m1: BurauMatrix, m2: BurauMatrix) -> BurauMatrix:
    n = len(m1)
    return tuple(tuple(m1[i][j] - m2[i][j] for j in range(n)) for i in range(n))


def mat_det(m: BurauMatrix) -> LaurentPoly:
    """Determinant by cofactor expansion; fine for the small n used here."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        term = m[0][j] * mat_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def burau_sigma(i: int, n: int, inverse: bool = False) -> BurauMatrix:
    """Burau matrix of sigma_i (or its inverse) on n strands."""
    if not (1 <= i <= n - 1):
        raise ValueError(f"generator index {i} out of range for {n} strands")
    rows = [
        [LaurentPoly.one() if r == c else LaurentPoly.zero() for c in range(n)]
        for r in range(n)
    ]
    r = i - 1
    if not inverse:
        rows[r][r] = LaurentPoly.from_terms([(0, 1), (1, -1)])  # 1 - t
        rows[r][r + 1] = LaurentPoly.t()
        rows[r + 1][r] = LaurentPoly.one()
        rows[r + 1][r + 1] = LaurentPoly.zero()
    else:
        rows[r][r] = LaurentPoly.zero()
        rows[r][r + 1] = LaurentPoly.one()
        rows[r + 1][r] = LaurentPoly.t(-1)
        rows[r + 1][r + 1] = LaurentPoly.from_terms([(0, 1), (-1, -1)])  # 1 - t^-1
    return tuple(tuple(row) for row in rows)


def burau(word: BraidWord) -> BurauMatrix:
    """Image of a braid word: the product of generator matrices, left to right."""
    result = identity_matrix(word.strands)
    for k in word.letters:
        result = mat_mul(result, burau_sigma(abs(k), word.strands, inverse=k < 0))
    return result


def specialize(m: BurauMatrix, t0: Fraction | int) -> tuple[tuple[Fraction, ...], ...]:
    """Entrywise evaluation at t = t0 (t0 must be nonzero)."""
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("cannot specialize at t = 0: Laurent polynomials may have poles")
    return tuple(tuple(entry.evaluate(t0) for entry in row) for row in m)


# ---------------------------------------------------------------------------
# Rational polynomial gcd for the obstruction analysis.
# ---------------------------------------------------------------------------


def _laurent_to_rational_coeffs(p: LaurentPoly) -> list[Fraction]:
    """Strip the unit t^min and return ascending coefficients over Q."""
    if p.is_zero():
        return []
    low = p.min_exponent()
    high = max(p.coeffs)
    return [Fraction(p.coeffs.get(k, 0)) for k in range(low, high + 1)]


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, coeff in enumerate(b):
            a[i + shift] -= factor * coeff
        _poly_trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def rational_gcd(entries: Sequence[LaurentPoly]) -> list[Fraction]:
    """Monic gcd in Q[t] of the given entries (units t^k stripped first)."""
    gcd: list[Fraction] = []
    for entry in entries:
        if entry.is_zero():
            continue
        gcd = _poly_gcd(gcd, _laurent_to_rational_coeffs(entry))
    return gcd


def t_minus_one_multiplicity(poly: list[Fraction]) -> tuple[int, list[Fraction]]:
    """Largest m with (t-1)^m dividing poly; returns (m, quotient)."""
    poly = _poly_trim(list(poly))
    m = 0
    while poly and sum(poly) == 0:  # value at t = 1
        # synthetic division by (t - 1)
        quotient: list[Fraction] = [Fraction(0)] * (len(poly) - 1)
        carry = Fraction(0)
        for k in range(len(poly) - 1, 0, -1):
            carry = poly[k] + carry
            quotient[k - 1] = carry
        poly = _poly_trim(quotient)
        m += 1
    return m, poly


def rational_roots(poly: list[Fraction]) -> list[Fraction]:
    """All rational roots of a nonzero polynomial, by the rational root test."""
    poly = _poly_trim(list(poly))
    if not poly:
        raise ValueError("the zero polynomial has every root")
    # Clear denominators to get integer coefficients.
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly]
    low = 0
    while ints[low] == 0:
        low += 1
    ints = ints[low:]
    roots = [Fraction(0)] * (1 if low else 0)
    constant, leading = abs(ints[0]), abs(ints[-1])
    candidates = {
        Fraction(sign * p, q)
        for p in _divisors(constant)
        for q in _divisors(leading)
        for sign in (1, -1)
    }
    roots += [x for x in candidates if sum(c * x ** k for k, c in enumerate(ints)) == 0]
    return sorted(set(roots))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, abs(n) + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# The obstruction system on three strands.
# ---------------------------------------------------------------------------

_ONE_MINUS_T = LaurentPoly.from_terms([(0, 1), (1, -1)])

#: The eight obstruction polynomials in their classically tabulated closed
#: forms, for the first relation; matching against derived entries is done
#: up to units +-t^k.
REFERENCE_OBSTRUCTION_POLYS: tuple[LaurentPoly, ...] = (
    LaurentPoly.from_terms([(0, 1), (1, -3), (2, 4), (3, -4), (4, 3), (5, -1)]),
    _ONE_MINUS_T ** 2 * LaurentPoly.from_terms([(0, -1), (1, -1), (2, -1), (3, 1)]),
    LaurentPoly.t() * _ONE_MINUS_T ** 5,
    _ONE_MINUS_T ** 2 * LaurentPoly.from_terms([(-1, -1), (0, 1), (1, -1), (2, 1)]),
    LaurentPoly.t(-1) * _ONE_MINUS_T ** 4 * LaurentPoly.from_terms([(0, 1), (2, 1)]),
    _ONE_MINUS_T ** 2 * LaurentPoly.from_terms([(0, 1), (1, -1), (2, 1), (3, -1)]),
    _ONE_MINUS_T ** 2 * LaurentPoly.from_terms([(0, -1), (1, 1), (2, -1), (-1, 1)]),
    LaurentPoly.from_terms([(0, 1), (1, -1), (2, -4), (3, 8), (4, -5), (5, 1)]),
)


def _flatten_nonzero(m: BurauMatrix) -> list[LaurentPoly]:
    return [entry for row in m for entry in row if not entry.is_zero()]


def homotopy_obstruction_system() -> dict:
    """Derive the obstruction entries and analyze their common roots.

    Returns a report with the nonzero entries of both commutation
    differences, the t = 1 vanishing check, the rational gcd (expected to
    be a power of t - 1), and the up-to-unit matching of the eight
    reference polynomials against the first relation's entries.
    """
    a13 = pure_gen(1, 3, 3)
    a23 = pure_gen(2, 3, 3)
    a13_conj = a23.inverse() * a13 * a23  # a13^{a23}
    a23_conj = a13.inverse() * a23 * a13  # a23^{a13}

    diff1 = mat_sub(burau(a13 * a13_conj), burau(a13_conj * a13))
    diff2 = mat_sub(burau(a23 * a23_conj), burau(a23_conj * a23))
    entries1 = _flatten_nonzero(diff1)
    entries2 = _flatten_nonzero(diff2)
    all_entries = entries1 + entries2

    matches = []
    for ref in REFERENCE_OBSTRUCTION_POLYS:
        found = next(
            (i for i, entry in enumerate(entries1) if equal_up_to_unit(ref, entry)),
            None,
        )
        matches.append({"reference": repr(ref), "matched_entry": found})

    gcd = rational_gcd(all_entries)
    multiplicity, residual = t_minus_one_multiplicity(gcd)
    roots = rational_roots(gcd)
    return {
        "relation1_entries": entries1,
        "relation2_entries": entries2,
        "relation1_nonzero_count": len(entries1),
        "relation2_nonzero_count": len(entries2),
        "all_vanish_at_t1": all(e.evaluate(1) == 0 for e in all_entries),
        "gcd_coeffs": gcd,
        "gcd_t_minus_one_multiplicity": multiplicity,
        "gcd_residual_coeffs": residual,
        "gcd_is_unit_times_power_of_t_minus_one": multiplicity >= 1
        and len(residual) == 1,
        "gcd_rational_roots": roots,
        "sole_rational_common_root_is_one": roots == [Fraction(1)]
        and multiplicity >= 1,
        "reference_matches": matches,
        "all_references_matched": all(m["matched_entry"] is not None for m in matches),
    }


def specialized_image_order(t0: Fraction | int = 1, n: int = 3, cap: int = 1000) -> int:
    """Order of the group generated by the specialized generator matrices."""
    gens = [specialize(burau_sigma(i, n), t0) for i in range(1, n)]
    gens += [specialize(burau_sigma(i, n, inverse=True), t0) for i in range(1, n)]
    identity = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )

    def mul(m1, m2):
        return tuple(
            tuple(sum(m1[i][k] * m2[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > cap:
                        raise RuntimeError("specialized image exceeded the cap")
        frontier = new
    return len(seen)
