"""Sign-valued 2- and 3-cochains on Z2^n with exact Z2 exponent arithmetic.

A sign s in {+1, -1} is stored as the exponent v in Z2 with s = (-1)**v, so
products of signs become XORs of exponents and nothing ever rounds.  Two
named 2-cochains on Z2^3 matter here:

    octonion:  exponent  x1*x2*y3 + x1*y2*x3 + y1*x2*x3 + sum_{i<=j} xi*yj
    clifford:  exponent  sum_{i<=j} xi*yj

Twisting the real group algebra of Z2^3 by them yields the octonions and
the Clifford algebra Cl(0,3) respectively.  The clifford cochain is a
2-cocycle (its coboundary is trivial); the octonion cochain is not, and its
coboundary is the 3-cocycle governing the octonions' associator.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .group import GroupElement, elements


class SignCochain2:
    """Normalized map G x G -> {+1, -1} on G = Z2^n as a Z2 exponent table.

    Normalized means the sign is +1 whenever either argument is the
    identity.  Construction rejects non-normalized tables instead of
    repairing them.
    """

    __slots__ = ("n", "exponents")

    def __init__(self, n: int, exponents) -> None:
        size = 1 << n
        table = tuple(tuple(int(v) for v in row) for row in exponents)
        if len(table) != size or any(len(row) != size for row in table):
            raise ValueError(f"expected a {size}x{size} exponent table for n={n}")
        if any(v not in (0, 1) for row in table for v in row):
            raise ValueError("exponents must be 0 or 1")
        if any(table[0][j] for j in range(size)) or any(table[i][0] for i in range(size)):
            raise ValueError("table is not normalized: identity row/column must be zero")
        self.n = n
        self.exponents = table

    @classmethod
    def from_function(cls, n: int, exponent: Callable[[GroupElement, GroupElement], int]) -> SignCochain2:
        """Tabulate exponent(x, y) mod 2 over all pairs."""
        elems = elements(n)
        return cls(n, tuple(tuple(exponent(x, y) % 2 for y in elems) for x in elems))

    @classmethod
    def trivial(cls, n: int) -> SignCochain2:
        """The constant +1 cochain."""
        size = 1 << n
        return cls(n, ((0,) * size,) * size)

    def exponent(self, x: GroupElement, y: GroupElement) -> int:
        if x.n != self.n or y.n != self.n:
            raise ValueError(f"dimension mismatch: cochain has n={self.n}")
        return self.exponents[x.index][y.index]

    def eval(self, x: GroupElement, y: GroupElement) -> int:
        """The sign (-1)**exponent(x, y)."""
        return 1 - 2 * self.exponent(x, y)

    def __mul__(self, other: SignCochain2) -> SignCochain2:
        if not isinstance(other, SignCochain2):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return SignCochain2(
            self.n,
            tuple(
                tuple(a ^ b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.exponents, other.exponents)
            ),
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignCochain2)
            and self.n == other.n
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.n, self.exponents))


class SignCochain3:
    """Normalized map G^3 -> {+1, -1} as a Z2 exponent table.

    Normalized means the sign is +1 whenever the middle argument is the
    identity.
    """

    __slots__ = ("n", "exponents")

    def __init__(self, n: int, exponents) -> None:
        size = 1 << n
        table = tuple(
            tuple(tuple(int(v) for v in row) for row in plane) for plane in exponents
        )
        if (
            len(table) != size
            or any(len(plane) != size for plane in table)
            or any(len(row) != size for plane in table for row in plane)
        ):
            raise ValueError(f"expected a {size}^3 exponent table for n={n}")
        if any(v not in (0, 1) for plane in table for row in plane for v in row):
            raise ValueError("exponents must be 0 or 1")
        if any(table[i][0][j] for i in range(size) for j in range(size)):
            raise ValueError("table is not normalized: middle-identity entries must be zero")
        self.n = n
        self.exponents = table

    @classmethod
    def from_function(
        cls, n: int, exponent: Callable[[GroupElement, GroupElement, GroupElement], int]
    ) -> SignCochain3:
        elems = elements(n)
        return cls(
            n,
            tuple(
                tuple(tuple(exponent(x, y, z) % 2 for z in elems) for y in elems)
                for x in elems
            ),
        )

    @classmethod
    def trivial(cls, n: int) -> SignCochain3:
        """The constant +1 cochain, i.e. the trivial 3-cocycle."""
        size = 1 << n
        return cls(n, (((0,) * size,) * size,) * size)

    def exponent(self, x: GroupElement, y: GroupElement, z: GroupElement) -> int:
        if x.n != self.n or y.n != self.n or z.n != self.n:
            raise ValueError(f"dimension mismatch: cochain has n={self.n}")
        return self.exponents[x.index][y.index][z.index]

    def eval(self, x: GroupElement, y: GroupElement, z: GroupElement) -> int:
        return 1 - 2 * self.exponent(x, y, z)

    def __mul__(self, other: SignCochain3) -> SignCochain3:
        if not isinstance(other, SignCochain3):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return SignCochain3(
            self.n,
            tuple(
                tuple(
                    tuple(a ^ b for a, b in zip(row_a, row_b))
                    for row_a, row_b in zip(plane_a, plane_b)
                )
                for plane_a, plane_b in zip(self.exponents, other.exponents)
            ),
        )

    def is_trivial(self) -> bool:
        return not any(v for plane in self.exponents for row in plane for v in row)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignCochain3)
            and self.n == other.n
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.n, self.exponents))


def trilinear(x: GroupElement, y: GroupElement) -> int:
    """The degree-3 part x1*x2*y3 + x1*y2*x3 + y1*x2*x3 mod 2 (n = 3 only).

    This is exactly the exponent by which the octonion and clifford
    cochains differ, and (symmetrized) the multiplier transporting
    braidings between the two associativity contexts.
    """
    if x.n != 3 or y.n != 3:
        raise ValueError("trilinear part is defined on Z2^3")
    (x1, x2, x3), (y1, y2, y3) = x.bits, y.bits
    return (x1 * x2 * y3 + x1 * y2 * x3 + y1 * x2 * x3) % 2


def _upper_pairs(x: GroupElement, y: GroupElement) -> int:
    # sum over 1 <= i <= j <= n of xi*yj
    n = x.n
    return sum(x.bits[i] * y.bits[j] for i in range(n) for j in range(i, n)) % 2


@lru_cache(maxsize=None)
def octonion_cochain() -> SignCochain2:
    """The 2-cochain twisting R[Z2^3] into the octonions."""
    return SignCochain2.from_function(3, lambda x, y: trilinear(x, y) + _upper_pairs(x, y))


@lru_cache(maxsize=None)
def clifford_cochain() -> SignCochain2:
    """The 2-cocycle twisting R[Z2^3] into the Clifford algebra Cl(0,3)."""
    return SignCochain2.from_function(3, _upper_pairs)


@lru_cache(maxsize=None)
def trilinear_cochain() -> SignCochain2:
    """The sign table (-1)**trilinear(x, y): the octonion-to-clifford gauge multiplier."""
    return SignCochain2.from_function(3, trilinear)


def coboundary(c: SignCochain2) -> SignCochain3:
    """The 3-cocycle F(x,y) F(xy,z) / (F(x,yz) F(y,z)) in exponent form."""
    size = 1 << c.n
    exp = c.exponents
    table = tuple(
        tuple(
            tuple(exp[i][j] ^ exp[i ^ j][k] ^ exp[i][j ^ k] ^ exp[j][k] for k in range(size))
            for j in range(size)
        )
        for i in range(size)
    )
    return SignCochain3(c.n, table)


def is_cocycle2(c: SignCochain2) -> bool:
    """True iff the coboundary of c is identically +1."""
    return coboundary(c).is_trivial()


def noncocycle_witness(c: SignCochain2) -> tuple[GroupElement, GroupElement, GroupElement] | None:
    """First triple (lexicographic) where the coboundary is -1, or None."""
    cob = coboundary(c).exponents
    elems = elements(c.n)
    size = 1 << c.n
    for i in range(size):
        for j in range(size):
            for k in range(size):
                if cob[i][j][k]:
                    return (elems[i], elems[j], elems[k])
    return None


def is_cocycle3(phi: SignCochain3) -> bool:
    """Check the 3-cocycle identity over all 2**(4n) quadruples.

    In exponent form: phi(y,z,t) + phi(x,y+z,t) + phi(x,y,z)
                    = phi(x,y,z+t) + phi(x+y,z,t)  (mod 2).
    """
    size = 1 << phi.n
    exp = phi.exponents
    for i in range(size):
        for j in range(size):
            for k in range(size):
                row_jk = exp[j][k]
                for m in range(size):
                    lhs = row_jk[m] ^ exp[i][j ^ k][m] ^ exp[i][j][k]
                    rhs = exp[i][j][k ^ m] ^ exp[i ^ j][k][m]
                    if lhs != rhs:
                        return False
    return True


def ratio_antisym(c: SignCochain2) -> SignCochain2:
    """The sign table F(x,y)/F(y,x), a quasi-bicharacter for coboundary(c)."""
    size = 1 << c.n
    exp = c.exponents
    return SignCochain2(
        c.n, tuple(tuple(exp[i][j] ^ exp[j][i] for j in range(size)) for i in range(size))
    )
