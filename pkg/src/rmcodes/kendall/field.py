"""Small prime-power fields GF(p^m) and modular linear algebra over Z_p.

Field elements are ints in ``range(p**m)``: the base-p digits, least
significant first, are the polynomial coefficients of the element.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from ..errors import InvalidArgument

Poly = tuple[int, ...]  # coefficients, constant term first


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``b`` over Z_p."""
    a = [x % p for x in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db]


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a given degree in increasing integer encoding."""
    for low in product(range(p), repeat=degree):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(poly: Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for q in _monic_polys(p, d):
            if not any(_poly_rem(poly, q, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Poly:
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {m} over Z_{p}")


@dataclass(frozen=True)
class FieldContext:
    p: int
    m: int
    modulus_poly: Poly

    @classmethod
    def default(cls, p: int, m: int) -> FieldContext:
        """GF(p^m) modulo the monic irreducible with the smallest integer encoding."""
        return cls(p, m, smallest_irreducible(p, m))

    def __post_init__(self):
        if len(self.modulus_poly) != self.m + 1 or self.modulus_poly[-1] != 1:
            raise InvalidArgument("modulus polynomial must be monic of degree m")
        if not is_irreducible(self.modulus_poly, self.p):
            raise AssertionError(f"{self.modulus_poly} is reducible over Z_{self.p}")

    @property
    def order(self) -> int:
        return self.p**self.m

    def to_vector(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_vector(self, v: Sequence[int]) -> int:
        a = 0
        for c in reversed(v):
            a = a * self.p + c % self.p
        return a

    def add(self, a: int, b: int) -> int:
        return self.from_vector([x + y for x, y in zip(self.to_vector(a), self.to_vector(b))])

    def mul(self, a: int, b: int) -> int:
        va, vb = self.to_vector(a), self.to_vector(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] += x * y
        return self.from_vector(_poly_rem(prod, self.modulus_poly, self.p))

    def pow(self, a: int, e: int) -> int:
        result = 1
        for _ in range(e):
            result = self.mul(result, a)
        return result


def rref_mod_p(
    rows: Sequence[Sequence[int]], p: int, column_priority: Sequence[int] | None = None
) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over Z_p.

    Pivot columns are searched in ``column_priority`` order (default left to
    right).  Returns the nonzero reduced rows and the pivot column of each.
    """
    mat = [[x % p for x in r] for r in rows]
    ncols = len(mat[0]) if mat else 0
    order = range(ncols) if column_priority is None else column_priority
    pivots: list[int] = []
    top = 0
    for c in order:
        pivot_row = next((r for r in range(top, len(mat)) if mat[r][c]), None)
        if pivot_row is None:
            continue
        mat[top], mat[pivot_row] = mat[pivot_row], mat[top]
        inv = pow(mat[top][c], -1, p)
        mat[top] = [x * inv % p for x in mat[top]]
        for r in range(len(mat)):
            if r != top and mat[r][c]:
                f = mat[r][c]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[top])]
        pivots.append(c)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots
