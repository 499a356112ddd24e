"""Linear codes over GF(q): duals, hulls, distances, scalings, MDS certifier.

Generator matrices are kept in reduced row-echelon form, so code equality
is literal matrix equality and certificates are canonical.  The MDS
certifier counts k-subsets of evaluation points with a prescribed group
sum by dynamic programming over (prefix, subset size, group element); a
code C_L(D, G) is MDS exactly when the count for sum(G) is zero.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import linalg
from .gf import FieldElement, FieldSpec
from .curve import GroupStructure, Point


class CodeError(ValueError):
    """Invalid code data or an out-of-budget exact computation."""


class ScalingVector:
    """A coordinatewise multiplier with every entry invertible."""

    __slots__ = ("spec", "entries")

    def __init__(self, spec: FieldSpec, entries: Iterable[int | FieldElement]):
        encs = []
        for e in entries:
            enc = spec.element(e).enc
            if enc == 0:
                raise CodeError("scaling vector entries must be nonzero")
            encs.append(enc)
        self.spec = spec
        self.entries = tuple(encs)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ScalingVector) and other.spec == self.spec
                and other.entries == self.entries)

    def inverse(self) -> "ScalingVector":
        return ScalingVector(self.spec,
                             [self.spec.inv_enc(e) for e in self.entries])

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, e) for e in self.entries)

    @classmethod
    def ones(cls, spec: FieldSpec, n: int) -> "ScalingVector":
        return cls(spec, [1] * n)

    def __repr__(self) -> str:
        return f"ScalingVector({list(self.entries)})"


class LinearCode:
    """[n, k] code over GF(q), stored as an RREF generator matrix.

    k = 0 (zero code) and k = n (full space) are representable so `dual`
    is total.  Rows may be given as encodings or FieldElements; any
    spanning set is accepted and reduced.
    """

    __slots__ = ("spec", "n", "k", "matrix", "_dual")

    def __init__(self, spec: FieldSpec,
                 rows: Sequence[Sequence[int | FieldElement]],
                 n: Optional[int] = None):
        enc_rows = [[spec.element(v).enc for v in row] for row in rows]
        widths = {len(r) for r in enc_rows}
        if len(widths) > 1:
            raise CodeError("ragged generator matrix")
        if enc_rows:
            width = widths.pop()
            if n is not None and n != width:
                raise CodeError(f"stated length {n} != row width {width}")
            n = width
        elif n is None:
            raise CodeError("empty code needs an explicit length")
        red, _ = linalg.rref(enc_rows, spec)
        self.spec = spec
        self.n = n
        self.k = len(red)
        self.matrix = tuple(tuple(r) for r in red)
        self._dual: Optional["LinearCode"] = None

    def dual(self) -> "LinearCode":
        """The [n, n-k] orthogonal code, via the kernel of the generator."""
        if self._dual is None:
            basis = linalg.nullspace([list(r) for r in self.matrix],
                                     self.spec, self.n)
            self._dual = LinearCode(self.spec, basis, n=self.n)
        return self._dual

    def scale(self, v: ScalingVector | Sequence[int]) -> "LinearCode":
        entries = v.entries if isinstance(v, ScalingVector) else \
            ScalingVector(self.spec, v).entries
        if len(entries) != self.n:
            raise CodeError("scaling vector length mismatch")
        mul = self.spec.mul_enc
        rows = [[mul(x, entries[j]) for j, x in enumerate(row)]
                for row in self.matrix]
        return LinearCode(self.spec, rows, n=self.n)

    def same_code(self, other: "LinearCode") -> bool:
        if other.spec != self.spec or other.n != self.n:
            raise CodeError("codes must share field and length")
        return self.matrix == other.matrix

    def hull_dim(self, cross_check: bool = True) -> int:
        """dim(C n C-perp) = k - rank(G G^T), optionally cross-checked
        against the rank of the stacked bases of C and its dual."""
        g = linalg.gram([list(r) for r in self.matrix], self.spec)
        h = self.k - linalg.rank(g, self.spec)
        if cross_check:
            stacked = [list(r) for r in self.matrix] + \
                      [list(r) for r in self.dual().matrix]
            h2 = self.n - linalg.rank(stacked, self.spec)
            if h != h2:
                raise CodeError(f"hull computations disagree: {h} vs {h2}")
        return h

    def codewords(self, budget: int = 2 ** 24):
        """Yield every codeword once, by odometer enumeration of messages."""
        qk = self.spec.q ** self.k
        if qk > budget:
            raise CodeError(
                f"q^k = {qk} exceeds the brute-force budget {budget}; "
                "certify MDS via mds_subset_check instead")
        word = [0] * self.n
        yield tuple(word)
        if self.k == 0:
            return
        digits = [0] * self.k
        spec = self.spec
        add, mul = spec.add_enc, spec.mul_enc
        q = spec.q
        # stepping message digit i from encoding a to a+1 adds
        # (elem(a+1) - elem(a)) * row_i; deltas depend on a in GF(p^m)
        delta = [spec.sub_enc((a + 1) % q, a) for a in range(q)]
        rows = [list(r) for r in self.matrix]
        for _ in range(qk - 1):
            i = 0
            while True:
                row = rows[i]
                d = delta[digits[i]]
                for j in range(self.n):
                    x = row[j]
                    if x:
                        word[j] = add(word[j], mul(d, x))
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
            yield tuple(word)

    def min_distance(self, budget: int = 2 ** 24) -> int:
        """Exact minimum Hamming weight by full codeword enumeration."""
        if self.k == 0:
            raise CodeError("zero code has no nonzero codeword")
        best = self.n + 1
        first = True
        for word in self.codewords(budget):
            if first:
                first = False
                continue
            w = sum(1 for x in word if x)
            if w < best:
                best = w
        return best

    def weight_distribution(self, budget: int = 2 ** 24) -> list[int]:
        """A_0..A_n by full enumeration, same budget as min_distance."""
        dist = [0] * (self.n + 1)
        for word in self.codewords(budget):
            dist[sum(1 for x in word if x)] += 1
        return dist

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}] over {self.spec!r}"


# spec-facing operation names

def dual(c: LinearCode) -> LinearCode:
    return c.dual()


def hull_dim(c: LinearCode, cross_check: bool = True) -> int:
    return c.hull_dim(cross_check=cross_check)


def min_distance(c: LinearCode, budget: int = 2 ** 24) -> int:
    return c.min_distance(budget)


def scale(c: LinearCode, v: ScalingVector | Sequence[int]) -> LinearCode:
    return c.scale(v)


def same_code(c1: LinearCode, c2: LinearCode) -> bool:
    return c1.same_code(c2)


# ---------------------------------------------------------------------------
# subset-sum dynamic programming over Z/d1 x Z/d2
# ---------------------------------------------------------------------------

def subset_sum_counts(coords: Sequence[tuple[int, int]], k: int,
                      d1: int, d2: int) -> list[int]:
    """Exact counts of k-subsets by group sum, flat-indexed i*d2 + j.

    The DP state is (prefix, subset size, group element); adding one more
    point shifts the previous size's table by the point's coordinates,
    which on the flat layout is a 2-D cyclic rotation done with slices.
    """
    n = len(coords)
    if not 0 <= k <= n:
        return [0] * (d1 * d2)
    size = d1 * d2
    dp = [[0] * size for _ in range(k + 1)]
    dp[0][0] = 1
    for idx, (gi, gj) in enumerate(coords):
        gi %= d1
        gj %= d2
        hi = min(k, idx + 1)
        lo = max(1, k - (n - idx - 1))
        for s in range(hi, lo - 1, -1):
            prev = dp[s - 1]
            if d1 == 1:
                shifted = (prev[-gj:] + prev[:-gj]) if gj else prev
            else:
                shifted = []
                for i in range(d1):
                    base = ((i - gi) % d1) * d2
                    row = prev[base:base + d2]
                    if gj:
                        row = row[-gj:] + row[:-gj]
                    shifted.extend(row)
            cur = dp[s]
            dp[s] = [x + y for x, y in zip(cur, shifted)]
    return dp[k]


def mds_subset_check(points: Sequence[Point], structure: GroupStructure,
                     k: int, target: Point) -> int:
    """Number of k-subsets of `points` whose group sum equals `target`.

    C_L(D, G) with sum(G) = target is MDS iff this count is zero.  The
    count itself feeds minimum-weight cross-checks, so it is exact.
    """
    if len(set(points)) != len(points):
        raise CodeError("evaluation points must be pairwise distinct")
    coords = [structure.coords(p) for p in points]
    tgt = structure.coords(target)
    counts = subset_sum_counts(coords, k, structure.d1, structure.d2)
    return counts[tgt[0] * structure.d2 + tgt[1]]


def subset_sum_counts_exhaustive(coords: Sequence[tuple[int, int]], k: int,
                                 d1: int, d2: int) -> list[int]:
    """Brute-force oracle for the DP, usable up to n around 16."""
    size = d1 * d2
    out = [0] * size
    for combo in combinations(coords, k):
        si = sum(c[0] for c in combo) % d1
        sj = sum(c[1] for c in combo) % d2
        out[si * d2 + sj] += 1
    return out
