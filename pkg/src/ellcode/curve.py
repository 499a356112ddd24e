"""Elliptic curves in general Weierstrass form over GF(q).

One chord-tangent code path covers every characteristic, matching the
curve shapes used on both the even and odd sides of the constructions.
Point lists are always produced in canonical order (infinity first, then
lexicographic by encoded coordinates) so downstream artifacts are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .gf import FieldElement, FieldSpec, factorize


class CurveError(ValueError):
    """Invalid curve data or a point/curve mismatch."""


class Point:
    """A rational point: affine (x, y) or the point at infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x: Optional[FieldElement], y: Optional[FieldElement]):
        if (x is None) != (y is None):
            raise CurveError("affine points need both coordinates")
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls) -> "Point":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def key(self) -> tuple[int, int]:
        """Canonical sort key; infinity sorts first."""
        if self.x is None:
            return (-1, -1)
        return (self.x.enc, self.y.enc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        if self.x is None or other.x is None:
            return self.x is None and other.x is None
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        if self.x is None:
            return hash(("inf",))
        return hash((self.x.enc, self.y.enc))

    def __repr__(self) -> str:
        if self.x is None:
            return "O"
        return f"({self.x.enc},{self.y.enc})"


INFINITY = Point.infinity()


@dataclass(frozen=True)
class GroupStructure:
    """E(F_q) as Z/d1 x Z/d2 with d1 | d2, plus a basis and full dlog table."""

    d1: int
    d2: int
    basis: tuple[Point, Point]
    dlog: dict[Point, tuple[int, int]]

    @property
    def size(self) -> int:
        return self.d1 * self.d2

    def coords(self, p: Point) -> tuple[int, int]:
        try:
            return self.dlog[p]
        except KeyError:
            raise CurveError(f"point {p} not in the discrete-log table") from None

    def flat_index(self, p: Point) -> int:
        i, j = self.coords(p)
        return i * self.d2 + j


class Curve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a FieldSpec."""

    __slots__ = ("spec", "a1", "a2", "a3", "a4", "a6",
                 "_points", "_point_set", "_structure", "_orders")

    def __init__(self, spec: FieldSpec, a1, a2, a3, a4, a6):
        self.spec = spec
        self.a1 = spec.element(a1)
        self.a2 = spec.element(a2)
        self.a3 = spec.element(a3)
        self.a4 = spec.element(a4)
        self.a6 = spec.element(a6)
        if not self.discriminant():
            raise CurveError("curve is singular (zero discriminant)")
        self._points: Optional[list[Point]] = None
        self._point_set: Optional[set[Point]] = None
        self._structure: Optional[GroupStructure] = None
        self._orders: Optional[dict[Point, int]] = None

    @classmethod
    def from_string(cls, spec: FieldSpec, text: str) -> "Curve":
        """Parse ``a1,a2,a3,a4,a6`` as canonical encodings."""
        parts = [t.strip() for t in text.split(",")]
        if len(parts) != 5:
            raise CurveError(f"curve spec {text!r} needs 5 coefficients")
        try:
            encs = [int(t) for t in parts]
        except ValueError:
            raise CurveError(f"cannot parse curve spec {text!r}") from None
        return cls(spec, *encs)

    def to_string(self) -> str:
        return ",".join(str(c.enc) for c in (self.a1, self.a2, self.a3, self.a4, self.a6))

    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1.enc, self.a2.enc, self.a3.enc, self.a4.enc, self.a6.enc)

    def discriminant(self) -> FieldElement:
        """Standard b2/b4/b6/b8 discriminant, valid in every characteristic."""
        s = self.spec
        two, three, four = s.element(2 % s.p), s.element(3 % s.p), s.element(4 % s.p)
        eight, nine = s.element(8 % s.p), s.element(9 % s.p)
        ts = s.element(27 % s.p)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + four * a2
        b4 = two * a4 + a1 * a3
        b6 = a3 * a3 + four * a6
        b8 = (a1 * a1 * a6 + four * a2 * a6 - a1 * a3 * a4
              + a2 * a3 * a3 - a4 * a4)
        return (-(b2 * b2 * b8) - eight * (b4 ** 3) - ts * (b6 * b6)
                + nine * b2 * b4 * b6)

    # -- point predicates ---------------------------------------------------

    def _check_field(self, p: Point) -> None:
        if not p.is_infinity and p.x.spec != self.spec:
            raise CurveError("point and curve live over different fields")

    def rhs(self, x: FieldElement) -> FieldElement:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def is_on_curve(self, p: Point) -> bool:
        self._check_field(p)
        if p.is_infinity:
            return True
        x, y = p.x, p.y
        return y * y + self.a1 * x * y + self.a3 * y == self.rhs(x)

    def is_ramified(self, p: Point) -> bool:
        """True iff p is fixed by the hyperelliptic involution (p = -p)."""
        if p.is_infinity:
            return True
        two = self.spec.element(2 % self.spec.p)
        return not (two * p.y + self.a1 * p.x + self.a3)

    # -- group law ------------------------------------------------------------

    def neg(self, p: Point) -> Point:
        if p.is_infinity:
            return INFINITY
        return Point(p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        x1, y1, x2, y2 = p.x, p.y, q.x, q.y
        a1, a2, a3, a4 = self.a1, self.a2, self.a3, self.a4
        if x1 == x2:
            if y2 == -y1 - a1 * x1 - a3:
                return INFINITY
            s = self.spec
            two, three = s.element(2 % s.p), s.element(3 % s.p)
            num = three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1
            den = two * y1 + a1 * x1 + a3
            lam = num / den
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1 - a1 * x3 - self.a3
        return Point(x3, y3)

    def mul(self, n: int, p: Point) -> Point:
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = INFINITY
        base = p
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    # -- enumeration & structure ---------------------------------------------

    def points(self) -> list[Point]:
        """All rational points in canonical order, infinity first."""
        if self._points is not None:
            return self._points
        s = self.spec
        pts = [INFINITY]
        for xe in range(s.q):
            x = s.element(xe)
            b = self.a1 * x + self.a3
            c = self.rhs(x)
            ys: list[FieldElement] = []
            if s.p == 2:
                if not b:
                    ys = [c.sqrt()]
                else:
                    binv2 = (b * b).inverse()
                    z = s.artin_solve((c * binv2).enc)
                    if z is not None:
                        z0 = s.element(z)
                        ys = [b * z0, b * (z0 + s.one)]
            else:
                # complete the square: (y + b/2)^2 = c + b^2/4
                half = s.element(2 % s.p).inverse()
                shift = b * half
                disc = c + shift * shift
                r = disc.sqrt()
                if r is not None:
                    if not r:
                        ys = [-shift]
                    else:
                        ys = [r - shift, -r - shift]
            pts.extend(Point(x, y) for y in ys)
        pts.sort(key=Point.key)
        self._points = pts
        self._point_set = set(pts)
        return pts

    def order(self) -> int:
        return len(self.points())

    def contains_rational(self, p: Point) -> bool:
        if self._point_set is None:
            self.points()
        return p in self._point_set

    def point_order(self, p: Point) -> int:
        """Least n >= 1 with [n]p = O, by divisor-lattice descent from #E."""
        if not self.is_on_curve(p):
            raise CurveError(f"{p} is not on the curve")
        if p.is_infinity:
            return 1
        if self._orders is None:
            self._orders = {}
        cached = self._orders.get(p)
        if cached is not None:
            return cached
        n = self.order()
        for ell in factorize(n):
            while n % ell == 0 and self.mul(n // ell, p).is_infinity:
                n //= ell
        self._orders[p] = n
        return n

    def torsion_points(self, r: int) -> list[Point]:
        if r < 1:
            raise CurveError("torsion order must be positive")
        return [p for p in self.points() if self.mul(r, p).is_infinity]

    def group_structure(self) -> GroupStructure:
        """Find (d1, d2), a basis, and brute-force dlogs for every point."""
        if self._structure is not None:
            return self._structure
        pts = self.points()
        n = len(pts)
        orders = {p: self.point_order(p) for p in pts}
        d2 = max(orders.values())
        d1 = n // d2
        if d1 * d2 != n or d2 % d1:
            raise CurveError("group structure inconsistent with exponent")
        if d1 > 1 and (self.spec.q - 1) % d1:
            raise CurveError("d1 does not divide q - 1")
        p2 = min((p for p in pts if orders[p] == d2), key=Point.key)
        if d1 == 1:
            p1 = INFINITY
        else:
            p1 = None
            span2 = set()
            acc = INFINITY
            for _ in range(d2):
                span2.add(acc)
                acc = self.add(acc, p2)
            for cand in pts:
                if orders[cand] != d1 or cand in span2:
                    continue
                seen = set()
                ok = True
                base = INFINITY
                for _ in range(d1):
                    cur = base
                    for _ in range(d2):
                        if cur in seen:
                            ok = False
                            break
                        seen.add(cur)
                        cur = self.add(cur, p2)
                    if not ok:
                        break
                    base = self.add(base, cand)
                if ok and len(seen) == n:
                    p1 = cand
                    break
            if p1 is None:
                raise CurveError("no independent basis point found")
        dlog: dict[Point, tuple[int, int]] = {}
        base = INFINITY
        for i in range(d1):
            cur = base
            for j in range(d2):
                dlog[cur] = (i, j)
                cur = self.add(cur, p2)
            base = self.add(base, p1)
        if len(dlog) != n:
            raise CurveError("dlog table does not cover the group")
        self._structure = GroupStructure(d1, d2, (p1, p2), dlog)
        return self._structure

    def __repr__(self) -> str:
        return f"Curve({self.spec!r}; {self.to_string()})"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Curve) and other.spec == self.spec
                and other.coefficients() == self.coefficients())

    def __hash__(self) -> int:
        return hash((self.spec, self.coefficients()))


# ---------------------------------------------------------------------------
# admissible group orders (exact characterization over any prime power)
# ---------------------------------------------------------------------------

def feasible_orders(q: int) -> list[tuple[int, int, str]]:
    """Every admissible #E(F_q) = q + 1 - beta with the case that admits it.

    Cases (a)-(e) on beta: coprimality with p, and the square/trace
    exceptions depending on the parity of n and p mod 3 / mod 4.
    """
    fac = factorize(q)
    if len(fac) != 1:
        raise CurveError(f"q={q} is not a prime power")
    (p, n), = fac.items()
    bound = isqrt(4 * q)
    out = []
    for beta in range(-bound, bound + 1):
        case = None
        if _gcd(abs(beta), p) == 1 and beta != 0:
            case = "a"
        elif n % 2 == 0 and beta * beta == 4 * q:
            case = "b"
        elif n % 2 == 0 and p % 3 != 1 and beta * beta == q:
            case = "c"
        elif n % 2 == 1 and p in (2, 3) and beta * beta == p ** (n + 1):
            case = "d"
        elif beta == 0 and (n % 2 == 1 or p % 4 != 1):
            case = "e"
        if case is not None:
            out.append((q + 1 - beta, beta, case))
    out.sort()
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


# spec-facing operation names

def is_on_curve(curve: Curve, p: Point) -> bool:
    return curve.is_on_curve(p)


def point_neg(curve: Curve, p: Point) -> Point:
    return curve.neg(p)


def point_add(curve: Curve, p: Point, q: Point) -> Point:
    return curve.add(p, q)


def scalar_mul(curve: Curve, n: int, p: Point) -> Point:
    return curve.mul(n, p)


def enumerate_points(curve: Curve) -> list[Point]:
    return curve.points()


def point_order(curve: Curve, p: Point) -> int:
    return curve.point_order(p)


def group_structure(curve: Curve) -> GroupStructure:
    return curve.group_structure()


def torsion_points(curve: Curve, r: int) -> list[Point]:
    return curve.torsion_points(r)
