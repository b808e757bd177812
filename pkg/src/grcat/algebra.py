"""Twisted group algebras k_F[Z2^n] with exact rational coefficients.

Basis elements u_g are indexed by group degrees and multiply by
u_x * u_y = F(x, y) u_{x+y}.  Associativity holds only up to the coboundary
of F, which is the associator sign on basis triples; braided commutativity
is tested against a braiding of the matching context.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import TYPE_CHECKING, Mapping

from .cochain import (
    SignCochain2,
    SignCochain3,
    clifford_cochain,
    coboundary,
    octonion_cochain,
)
from .group import GroupElement, elements, identity

if TYPE_CHECKING:
    from .braiding import Braiding


class AlgebraElement:
    """Finitely supported map from group degrees to exact rationals.

    Zero coefficients are never stored, so support comparisons are exact.
    Homogeneous means support of size at most one.
    """

    __slots__ = ("n", "coefficients")

    def __init__(self, n: int, coefficients: Mapping[GroupElement, Rational]) -> None:
        coeffs: dict[GroupElement, Fraction] = {}
        for g, value in dict(coefficients).items():
            if not isinstance(g, GroupElement):
                raise TypeError(f"keys must be GroupElement, got {type(g).__name__}")
            if g.n != n:
                raise ValueError(f"dimension mismatch: element of Z2^{g.n} in Z2^{n} algebra")
            q = Fraction(value)
            if q:
                coeffs[g] = q
        self.n = n
        self.coefficients = coeffs

    def support(self) -> tuple[GroupElement, ...]:
        return tuple(sorted(self.coefficients, key=lambda g: g.index))

    def coefficient(self, g: GroupElement) -> Fraction:
        return self.coefficients.get(g, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_homogeneous(self) -> bool:
        return len(self.coefficients) <= 1

    @property
    def degree(self) -> GroupElement:
        if self.is_zero or not self.is_homogeneous:
            raise ValueError("degree is defined only for homogeneous nonzero elements")
        return next(iter(self.coefficients))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        out = dict(self.coefficients)
        for g, v in other.coefficients.items():
            out[g] = out.get(g, Fraction(0)) + v
        return AlgebraElement(self.n, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {g: -v for g, v in self.coefficients.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> AlgebraElement:
        if isinstance(scalar, (int, Fraction)):
            return AlgebraElement(self.n, {g: v * scalar for g, v in self.coefficients.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.coefficients == other.coefficients
        )

    def __repr__(self) -> str:
        if self.is_zero:
            return "AlgebraElement(0)"
        terms = " + ".join(f"{v}*u[{g}]" for g, v in sorted(self.coefficients.items(), key=lambda kv: kv[0].index))
        return f"AlgebraElement({terms})"


@dataclass(frozen=True)
class GradedSimplicityReport:
    """Verdict plus, per degree, the scalar s with u_g * (s u_g) = unit."""

    simple: bool
    inverse_scalars: tuple[tuple[GroupElement, int], ...]


class TwistedGroupAlgebra:
    """The group algebra of Z2^n with multiplication re-scaled by a sign cochain."""

    __slots__ = ("n", "cochain", "_context")

    def __init__(self, cochain: SignCochain2) -> None:
        self.n = cochain.n
        self.cochain = cochain
        self._context = None

    @property
    def context(self) -> SignCochain3:
        """Coboundary of the twisting cochain: the associativity constraint."""
        if self._context is None:
            self._context = coboundary(self.cochain)
        return self._context

    def basis(self, g: GroupElement) -> AlgebraElement:
        if g.n != self.n:
            raise ValueError(f"dimension mismatch: {g.n} != {self.n}")
        return AlgebraElement(self.n, {g: Fraction(1)})

    def unit(self) -> AlgebraElement:
        return self.basis(identity(self.n))

    def mul(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of u_x * u_y = F(x, y) u_{x+y}."""
        if a.n != self.n or b.n != self.n:
            raise ValueError(f"dimension mismatch: algebra has n={self.n}")
        ev = self.cochain.eval
        out: dict[GroupElement, Fraction] = {}
        for g, cg in a.coefficients.items():
            for h, ch in b.coefficients.items():
                k = g + h
                out[k] = out.get(k, Fraction(0)) + cg * ch * ev(g, h)
        return AlgebraElement(self.n, out)

    def associator_sign(self, x: GroupElement, y: GroupElement, z: GroupElement) -> int:
        """The scalar with (u_x u_y) u_z = sign * u_x (u_y u_z)."""
        return self.context.eval(x, y, z)

    def commutes_braided(self, braiding: Braiding, a: AlgebraElement, b: AlgebraElement) -> bool:
        """Whether a * b = R(|b|, |a|) b * a for homogeneous nonzero a, b."""
        if a.is_zero or b.is_zero or not a.is_homogeneous or not b.is_homogeneous:
            raise ValueError("braided commutation is defined on homogeneous nonzero elements")
        if braiding.n != self.n:
            raise ValueError(f"dimension mismatch: {braiding.n} != {self.n}")
        if braiding.context != self.context:
            raise ValueError("braiding context does not match the algebra's coboundary")
        return self.mul(a, b) == braiding.eval(b.degree, a.degree) * self.mul(b, a)

    def is_graded_simple(self) -> GradedSimplicityReport:
        """Check every basis element has a two-sided inverse.

        For sign cochains u_g * u_g = F(g, g) * unit with F(g, g) in {+1, -1},
        so the inverse of u_g is F(g, g) u_g and the verdict is always true;
        the products are still multiplied out rather than assumed.
        """
        one = self.unit()
        simple = True
        inverses = []
        for g in elements(self.n):
            ug = self.basis(g)
            scalar = self.cochain.eval(g, g)
            candidate = scalar * ug
            if self.mul(ug, candidate) != one or self.mul(candidate, ug) != one:
                simple = False
            inverses.append((g, scalar))
        return GradedSimplicityReport(simple=simple, inverse_scalars=tuple(inverses))

    def gauge_twist(self, multiplier: SignCochain2) -> TwistedGroupAlgebra:
        """The algebra twisted by F * multiplier (pointwise sign product)."""
        if multiplier.n != self.n:
            raise ValueError(f"dimension mismatch: {multiplier.n} != {self.n}")
        return TwistedGroupAlgebra(self.cochain * multiplier)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TwistedGroupAlgebra) and self.cochain == other.cochain

    def __hash__(self) -> int:
        return hash(self.cochain)


@lru_cache(maxsize=None)
def octonion_algebra() -> TwistedGroupAlgebra:
    """The octonions as the twisted group algebra of Z2^3."""
    return TwistedGroupAlgebra(octonion_cochain())


@lru_cache(maxsize=None)
def clifford_algebra() -> TwistedGroupAlgebra:
    """Cl(0,3) as the twisted group algebra of Z2^3."""
    return TwistedGroupAlgebra(clifford_cochain())
