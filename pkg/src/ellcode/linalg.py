"""Exact dense linear algebra over GF(q) on integer-encoded matrices.

Matrices are lists of equal-length rows of canonical encodings.  Everything
here is deterministic: pivoting scans left to right, top to bottom, so a
given row space always produces the same reduced row-echelon form.
"""

from __future__ import annotations

from .gf import FieldSpec


def rref(rows: list[list[int]], spec: FieldSpec) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form.  Returns (nonzero rows, pivot columns)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    exp2, log = spec._exp2, spec._log
    char2 = spec.p == 2
    if not char2:
        addt, negt = spec._addt, spec._negt
        if addt is None:
            # beyond the add-table size cap: fall back to digitwise adds
            addt = _FallbackAdd(spec)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        row_r = a[r]
        pv = row_r[c]
        if pv != 1:
            linv = (spec.q - 1) - log[pv]
            for j in range(c, ncols):
                v = row_r[j]
                if v:
                    row_r[j] = exp2[log[v] + linv]
        for i in range(nrows):
            f = a[i][c]
            if i == r or not f:
                continue
            row_i = a[i]
            lf = log[f]
            if char2:
                for j in range(c, ncols):
                    v = row_r[j]
                    if v:
                        row_i[j] ^= exp2[lf + log[v]]
            else:
                for j in range(c, ncols):
                    v = row_r[j]
                    if v:
                        row_i[j] = addt[row_i[j]][negt[exp2[lf + log[v]]]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [a[i] for i in range(r)], pivots


class _FallbackAdd:
    """Row-at-a-time adapter so rref's table indexing works without a table."""

    __slots__ = ("spec",)

    def __init__(self, spec: FieldSpec):
        self.spec = spec

    def __getitem__(self, a: int) -> "_FallbackAddRow":
        return _FallbackAddRow(self.spec, a)


class _FallbackAddRow:
    __slots__ = ("spec", "a")

    def __init__(self, spec: FieldSpec, a: int):
        self.spec = spec
        self.a = a

    def __getitem__(self, b: int) -> int:
        return self.spec.add_enc(self.a, b)


def rank(rows: list[list[int]], spec: FieldSpec) -> int:
    return len(rref(rows, spec)[0])


def nullspace(rows: list[list[int]], spec: FieldSpec, ncols: int) -> list[list[int]]:
    """RREF basis of {v : A v^T = 0} for the row space of A."""
    red, pivots = rref(rows, spec)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = spec.neg_enc(red[i][fc])
        basis.append(v)
    out, _ = rref(basis, spec)
    return out


def mat_mul(a: list[list[int]], b: list[list[int]], spec: FieldSpec) -> list[list[int]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    bt = [list(col) for col in zip(*b)] if b else []
    return [[_dot(row, col, spec) for col in bt] for row in a]


def gram(a: list[list[int]], spec: FieldSpec) -> list[list[int]]:
    """A A^T, the Gram matrix of the rows under the standard bilinear form."""
    return [[_dot(r1, r2, spec) for r2 in a] for r1 in a]


def _dot(u: list[int], v: list[int], spec: FieldSpec) -> int:
    exp2, log = spec._exp2, spec._log
    if spec.p == 2:
        acc = 0
        for x, y in zip(u, v):
            if x and y:
                acc ^= exp2[log[x] + log[y]]
        return acc
    addt = spec._addt
    acc = 0
    if addt is not None:
        for x, y in zip(u, v):
            if x and y:
                acc = addt[acc][exp2[log[x] + log[y]]]
        return acc
    add = spec.add_enc
    for x, y in zip(u, v):
        if x and y:
            acc = add(acc, exp2[log[x] + log[y]])
    return acc


def is_rref(rows: list[list[int]], spec: FieldSpec) -> bool:
    """True iff rows are a reduced row-echelon basis (no zero rows)."""
    red, _ = rref(rows, spec)
    return [list(r) for r in rows] == red and len(red) == len(rows)
