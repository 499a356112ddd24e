"""Exact arithmetic in GF(p) and GF(p^m) with an explicit polynomial basis.

Every element carries the field it lives in and is addressed by its
canonical integer encoding ``enc(a) = sum(coeffs[i] * p**i)``, which is a
bijection onto ``[0, q)``.  The encoding is the interchange format used in
files, certificates and the command line, so results are bit-reproducible.

Fields are desk-scale (q up to a few thousand); multiplication runs on
exp/log tables built from a fixed primitive element.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence


class FieldError(ValueError):
    """Invalid field construction or a cross-field operand mix."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division.  Inputs are desk-scale."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p) with plain-int coefficients (modulus bootstrap only)
# ---------------------------------------------------------------------------

def _pp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _pp_mod(out, mod, p)


def _pp_mod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _pp_trim(list(f))
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        factor = (f[-1] * inv_lead) % p
        for i, gi in enumerate(g):
            f[i + shift] = (f[i + shift] - factor * gi) % p
        _pp_trim(f)
    return f


def _pp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _pp_trim(list(f)), _pp_trim(list(g))
    while g:
        f, g = g, _pp_mod(f, g, p)
    return f


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive-style irreducibility test for monic f of degree m <= 8.

    Degree <= 3 is settled by a root search; degrees 4..8 check
    gcd(f, x^(p^i) - x) = const for i = 1..m//2.
    """
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m == 1:
        return True
    if m <= 3:
        for a in range(p):
            acc = 0
            for c in reversed(f):
                acc = (acc * a + c) % p
            if acc == 0:
                return False
        return True
    # x^(p^i) mod f via repeated Frobenius of x
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        # raise to the p-th power by square-and-multiply on exponent p
        acc = [1]
        base = xp
        e = p
        while e:
            if e & 1:
                acc = _pp_mulmod(acc, base, f, p)
            base = _pp_mulmod(base, base, f, p)
            e >>= 1
        xp = acc
        diff = list(xp)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd(f, diff, p)
        if len(g) - 1 >= 1:
            return False
    return True


_ADD_TABLE_MAX_Q = 1024


class FieldSpec:
    """GF(p^m) defined by a monic irreducible modulus c0 + c1 x + ... + cm x^m.

    The spec owns the arithmetic tables; raw ``*_enc`` methods operate on
    integer encodings and back every `FieldElement` operator.  Specs are
    immutable after construction and safe to share.
    """

    __slots__ = ("p", "m", "modulus", "q", "_exp", "_exp2", "_log", "_addt",
                 "_negt", "_gen_enc", "_artin")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if not 1 <= m <= 8:
            raise FieldError(f"extension degree m={m} out of supported range 1..8")
        mod = [c % p for c in modulus]
        if len(mod) != m + 1:
            raise FieldError(f"modulus needs {m + 1} coefficients, got {len(mod)}")
        if mod[-1] != 1:
            raise FieldError("modulus must be monic")
        if not _is_irreducible(mod, p):
            raise FieldError(f"modulus {mod} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = tuple(mod)
        self.q = p ** m
        self._build_tables()
        self._artin: Optional[dict[int, int]] = None

    # -- construction helpers -------------------------------------------------

    def _coeffs_of(self, enc: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(enc % p)
            enc //= p
        return out

    def _enc_of(self, coeffs: Sequence[int]) -> int:
        enc = 0
        for c in reversed(list(coeffs)):
            enc = enc * self.p + (c % self.p)
        return enc

    def _raw_mul(self, a: int, b: int) -> int:
        fa, fb = self._coeffs_of(a), self._coeffs_of(b)
        prod = [0] * (2 * self.m - 1)
        p = self.p
        for i, ai in enumerate(fa):
            if ai:
                for j, bj in enumerate(fb):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        prod = _pp_mod(prod, list(self.modulus), p)
        return self._enc_of(prod + [0] * (self.m - len(prod)))

    def _raw_pow(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return acc

    def _is_primitive(self, enc: int, q1_factors: dict[int, int]) -> bool:
        if enc == 0:
            return False
        for ell in q1_factors:
            if self._raw_pow(enc, (self.q - 1) // ell) == 1:
                return False
        return True

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        q1_factors = factorize(q - 1) if q > 2 else {}
        gen = 1
        if q > 2:
            gen = 0
            if self.m >= 2 and self._is_primitive(p, q1_factors):
                gen = p          # enc(theta) = p: prefer the basis element
            else:
                for cand in range(2, q):
                    if self._is_primitive(cand, q1_factors):
                        gen = cand
                        break
        self._gen_enc = gen
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        if x != 1:
            raise FieldError("generator search failed to close the cycle")
        self._exp = exp
        self._exp2 = exp + exp      # doubled so mul can skip a modulo
        self._log = log
        if p == 2:
            self._addt = None
            self._negt = None
        else:
            negt = [0] * q
            for a in range(q):
                negt[a] = self._enc_of([(-c) % p for c in self._coeffs_of(a)])
            self._negt = negt
            if q <= _ADD_TABLE_MAX_Q:
                addt = []
                for a in range(q):
                    ca = self._coeffs_of(a)
                    row = [0] * q
                    for b in range(q):
                        cb = self._coeffs_of(b)
                        row[b] = self._enc_of([(ca[i] + cb[i]) % p
                                               for i in range(self.m)])
                    addt.append(row)
                self._addt = addt
            else:
                self._addt = None

    # -- raw encoded arithmetic ----------------------------------------------

    def add_enc(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._addt is not None:
            return self._addt[a][b]
        ca, cb = self._coeffs_of(a), self._coeffs_of(b)
        return self._enc_of([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg_enc(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._negt is not None:
            return self._negt[a]
        return self._enc_of([(-c) % self.p for c in self._coeffs_of(a)])

    def sub_enc(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add_enc(a, self.neg_enc(b))

    def mul_enc(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp2[self._log[a] + self._log[b]]

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow_enc(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def sqrt_enc(self, a: int) -> Optional[int]:
        """Square root by table: always exists in char 2, parity test else.

        Odd characteristic ties break toward the smaller encoding.
        """
        if a == 0:
            return 0
        la = self._log[a]
        if self.p == 2:
            return self._exp[(la * (self.q // 2)) % (self.q - 1)]
        if la % 2:
            return None
        r = self._exp[la // 2]
        return min(r, self.neg_enc(r))

    def artin_solve(self, c: int) -> Optional[int]:
        """Smallest z with z^2 + z = c, or None.  Characteristic 2 only."""
        if self.p != 2:
            raise FieldError("artin_solve applies to characteristic 2 only")
        if self._artin is None:
            table: dict[int, int] = {}
            for z in range(self.q):
                key = self.add_enc(self.mul_enc(z, z), z)
                if key not in table:
                    table[key] = z
            self._artin = table
        return self._artin.get(c)

    # -- element access ---------------------------------------------------

    def element(self, value: "int | FieldElement") -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec is not self and value.spec != self:
                raise FieldError("element belongs to a different field")
            return value
        enc = int(value)
        if not 0 <= enc < self.q:
            raise FieldError(f"encoding {enc} out of range for {self!r}")
        return FieldElement(self, enc)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def generator(self) -> "FieldElement":
        return FieldElement(self, self._gen_enc)

    def elements(self) -> Iterator["FieldElement"]:
        for enc in range(self.q):
            yield FieldElement(self, enc)

    # -- text format --------------------------------------------------------

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse ``p=<int>,m=<int>,mod=<c0,...,cm>``."""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        p = m = None
        mod: list[int] = []
        in_mod = False
        try:
            for tok in tokens:
                if tok.startswith("p="):
                    p = int(tok[2:])
                elif tok.startswith("m=") and not in_mod:
                    m = int(tok[2:])
                elif tok.startswith("mod="):
                    in_mod = True
                    mod.append(int(tok[4:]))
                elif in_mod:
                    mod.append(int(tok))
                else:
                    raise ValueError(tok)
        except ValueError as exc:
            raise FieldError(f"cannot parse field spec {text!r}: {exc}") from None
        if p is None or m is None or not mod:
            raise FieldError(f"field spec {text!r} must define p, m and mod")
        return cls(p, m, mod)

    def to_string(self) -> str:
        return f"p={self.p},m={self.m},mod=" + ",".join(str(c) for c in self.modulus)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class FieldElement:
    """An element of a `FieldSpec`, addressed by its canonical encoding."""

    __slots__ = ("spec", "enc")

    def __init__(self, spec: FieldSpec, enc: int):
        self.spec = spec
        self.enc = enc

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec._coeffs_of(self.enc))

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldError(f"operands live in different fields: "
                             f"{self.spec!r} vs {other.spec!r}")
        return other

    def __add__(self, other: "FieldElement") -> "FieldElement":
        other = self._check(other)
        return FieldElement(self.spec, self.spec.add_enc(self.enc, other.enc))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        other = self._check(other)
        return FieldElement(self.spec, self.spec.sub_enc(self.enc, other.enc))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg_enc(self.enc))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        other = self._check(other)
        return FieldElement(self.spec, self.spec.mul_enc(self.enc, other.enc))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        other = self._check(other)
        return FieldElement(self.spec,
                            self.spec.mul_enc(self.enc, self.spec.inv_enc(other.enc)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow_enc(self.enc, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_enc(self.enc))

    def sqrt(self) -> Optional["FieldElement"]:
        r = self.spec.sqrt_enc(self.enc)
        return None if r is None else FieldElement(self.spec, r)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldElement) and other.enc == self.enc
                and (other.spec is self.spec or other.spec == self.spec))

    def __hash__(self) -> int:
        return hash((self.enc, self.spec.q))

    def __bool__(self) -> bool:
        return self.enc != 0

    def __int__(self) -> int:
        return self.enc

    def __repr__(self) -> str:
        return f"{self.spec!r}:{self.enc}"


# ---------------------------------------------------------------------------
# operation names used throughout the package
# ---------------------------------------------------------------------------

def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_pow(a: FieldElement, e: int) -> FieldElement:
    return a ** e


def field_sqrt(a: FieldElement) -> Optional[FieldElement]:
    return a.sqrt()


def field_generator(spec: FieldSpec) -> FieldElement:
    """The basis element theta when it is primitive, else the smallest
    primitive encoding.  Its multiplicative order is q - 1 by construction."""
    return spec.generator()


# ---------------------------------------------------------------------------
# polynomials over GF(q): tuples of FieldElement, index i = coefficient of x^i
# ---------------------------------------------------------------------------

Poly = tuple[FieldElement, ...]


def poly_trim(f: Sequence[FieldElement]) -> Poly:
    coeffs = list(f)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def poly_degree(f: Sequence[FieldElement]) -> int:
    """Degree with the convention deg(0) = -1."""
    return len(poly_trim(f)) - 1


def poly_constant(spec: FieldSpec, value: int | FieldElement) -> Poly:
    e = spec.element(value)
    return (e,) if e else ()


def poly_x(spec: FieldSpec) -> Poly:
    return (spec.zero, spec.one)


def poly_add(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> Poly:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        if i < len(f) and i < len(g):
            out.append(f[i] + g[i])
        elif i < len(f):
            out.append(f[i])
        else:
            out.append(g[i])
    return poly_trim(out)


def poly_neg(f: Sequence[FieldElement]) -> Poly:
    return tuple(-c for c in f)


def poly_sub(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> Poly:
    return poly_add(f, poly_neg(g))


def poly_mul(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> Poly:
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return ()
    spec = f[0].spec
    out_enc = [0] * (len(f) + len(g) - 1)
    mul, add = spec.mul_enc, spec.add_enc
    for i, fi in enumerate(f):
        ei = fi.enc
        if ei:
            for j, gj in enumerate(g):
                if gj.enc:
                    out_enc[i + j] = add(out_enc[i + j], mul(ei, gj.enc))
    return poly_trim([FieldElement(spec, e) for e in out_enc])


def poly_scale(f: Sequence[FieldElement], s: FieldElement) -> Poly:
    return poly_trim([c * s for c in f])


def poly_eval(f: Sequence[FieldElement], a: FieldElement) -> FieldElement:
    """Horner evaluation of f at a."""
    spec = a.spec
    acc = 0
    mul, add = spec.mul_enc, spec.add_enc
    ea = a.enc
    for c in reversed(list(f)):
        acc = add(mul(acc, ea), c.enc)
    return FieldElement(spec, acc)


def poly_derivative(f: Sequence[FieldElement]) -> Poly:
    """Formal derivative: coefficient i*c_i with i reduced mod p, so
    even-exponent terms vanish in characteristic 2."""
    f = poly_trim(f)
    if len(f) <= 1:
        return ()
    spec = f[0].spec
    out = [FieldElement(spec, spec.mul_enc(f[i].enc, (i % spec.p)))
           for i in range(1, len(f))]
    return poly_trim(out)


def poly_divmod(f: Sequence[FieldElement],
                g: Sequence[FieldElement]) -> tuple[Poly, Poly]:
    f, g = poly_trim(f), poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    spec = g[0].spec
    if not f:
        return (), ()
    rem = list(f)
    dg = len(g) - 1
    quot = [spec.zero] * max(0, len(f) - dg)
    inv_lead = g[-1].inverse()
    while True:
        rem = list(poly_trim(rem))
        if not rem or len(rem) - 1 < dg:
            break
        shift = len(rem) - 1 - dg
        factor = rem[-1] * inv_lead
        quot[shift] = factor
        for i, gi in enumerate(g):
            rem[i + shift] = rem[i + shift] - factor * gi
    return poly_trim(quot), poly_trim(rem)


def poly_mod(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> Poly:
    return poly_divmod(f, g)[1]


def poly_monic(f: Sequence[FieldElement]) -> Poly:
    f = poly_trim(f)
    if not f:
        return ()
    lead = f[-1]
    if lead.enc == 1:
        return f
    return poly_scale(f, lead.inverse())


def poly_gcd(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> Poly:
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_mod(f, g)
    return poly_monic(f)


def root_multiplicity(f: Sequence[FieldElement], x0: FieldElement) -> int:
    """Multiplicity of x0 as a root of f (0 if not a root).  f must be nonzero."""
    f = poly_trim(f)
    if not f:
        raise ValueError("zero polynomial has no root multiplicity")
    spec = x0.spec
    mult = 0
    coeffs = list(f)
    while True:
        if poly_eval(coeffs, x0).enc != 0:
            return mult
        # synthetic division by (x - x0)
        out = [spec.zero] * (len(coeffs) - 1)
        carry = spec.zero
        for i in range(len(coeffs) - 1, 0, -1):
            carry = coeffs[i] + carry * x0
            out[i - 1] = carry
        coeffs = out
        mult += 1
        if not coeffs:
            return mult
