"""Exact arithmetic in GF(p^n) plus the small linear-algebra kernel.

An element is a canonical coefficient vector over GF(p), packed as the
integer sum(c_i * p**i) in [0, q).  With this encoding 0 and 1 are always
the additive and multiplicative identities, equality and hashing are
structural, and the enumeration order 0, 1, ..., q-1 is the element order
every downstream "first/canonical" choice inherits.

Multiplication is table-driven for small fields and log/antilog-driven for
larger ones; plain polynomial reduction is kept as the reference path and
the two must agree bit for bit (see the test suite).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    CompositeCharacteristic,
    DivisionByZero,
    EmptyMatrix,
    MixedFields,
    NoDefaultModulus,
    OddCharacteristic,
    ReducibleModulus,
    ZeroPolynomial,
)

MAX_ORDER = 1 << 16

# Shipped moduli, as low-to-high coefficient tuples.  Every entry is
# re-validated by is_irreducible at construction time.
DEFAULT_MODULI = {
    (2, 1): (0, 1),                            # x
    (2, 2): (1, 1, 1),                         # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),                      # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),                   # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),                # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0, 1),             # x^6 + x + 1
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),          # x^7 + x + 1
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),       # x^8 + x^4 + x^3 + x^2 + 1
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
}

# table-size cutoffs: full q*q product table below, log/antilog above
_MUL_TABLE_MAX = 64
_ADD_TABLE_MAX = 256


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p): trimmed low-to-high coefficient tuples, () is zero

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _deg(a: tuple[int, ...]) -> int:
    return len(a) - 1


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                 for i in range(n))


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                 for i in range(n))


def _poly_scale(a, k, p):
    k %= p
    if k == 0:
        return ()
    return _trim((c * k) % p for c in a)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    db = _deg(b)
    while len(rem) - 1 >= db and any(rem):
        dr = len(rem) - 1
        if rem[-1] == 0:
            rem.pop()
            continue
        k = (rem[-1] * inv_lead) % p
        shift = dr - db
        quo[shift] = k
        for i, cb in enumerate(b):
            rem[shift + i] = (rem[shift + i] - k * cb) % p
        rem.pop()
    return _trim(quo), _trim(rem)


def _poly_mod(a, b, p):
    return _poly_divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    return _poly_scale(a, pow(a[-1], p - 2, p), p)


def _poly_gcd(a, b, p):
    while b:
        a, b = b, _poly_mod(a, b, p)
    return _monic(a, p)


def _poly_powmod(base, e, mod, p):
    result = (1,)
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Whether poly (low-to-high coefficients) is irreducible over GF(p).

    Uses the gcd-with-Frobenius criterion: after making the polynomial
    monic, it is irreducible iff gcd(x^(p^i) - x, poly) = 1 for every
    1 <= i <= deg/2, since any nontrivial factorisation contains an
    irreducible factor of degree at most deg/2.
    """
    if not _is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    f = _trim(c % p for c in poly)
    if not f:
        raise ZeroPolynomial("the zero polynomial has no factorisation")
    d = _deg(f)
    if d == 0:
        return False  # nonzero constants are units, not irreducible
    f = _monic(f, p)
    x = (0, 1)
    frob = x
    for _ in range(d // 2):
        frob = _poly_powmod(frob, p, f, p)
        g = _poly_gcd(_poly_sub(frob, x, p), f, p)
        if _deg(g) != 0:
            return False
    return True


def parse_modulus(text: str, p: int) -> tuple[int, ...]:
    """Parse a modulus written as 'c0,c1,...' (low-to-high) or, for p = 2,
    as a hex bitmask such as 0xB for x^3 + x + 1."""
    text = text.strip()
    if text.lower().startswith("0x"):
        if p != 2:
            raise ValueError("hex bitmask moduli are only defined for p = 2")
        mask = int(text, 16)
        if mask <= 0:
            raise ValueError("modulus bitmask must be positive")
        return tuple((mask >> i) & 1 for i in range(mask.bit_length()))
    try:
        coeffs = tuple(int(tok, 0) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed modulus {text!r}") from exc
    if not coeffs:
        raise ValueError("empty modulus")
    return coeffs


class FieldSpec:
    """The field GF(p^n) for a fixed irreducible modulus.

    Immutable after construction; all arithmetic tables are built once.
    Two specs compare equal iff they agree on (p, n, modulus), so elements
    of independently constructed but identical fields interoperate.
    """

    __slots__ = (
        "characteristic", "degree", "modulus", "order",
        "_add_i", "_sub_i", "_neg_i", "_mul_i",
        "_exp", "_log", "_hash",
    )

    def __init__(self, p: int, n: int, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not _is_prime(p):
            raise CompositeCharacteristic(f"characteristic must be prime, got {p!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"degree must be a positive integer, got {n!r}")
        if p ** n > MAX_ORDER:
            raise ValueError(f"order {p}^{n} exceeds the supported bound 2^16")
        if modulus is None:
            try:
                modulus = DEFAULT_MODULI[(p, n)]
            except KeyError:
                raise NoDefaultModulus(
                    f"no built-in modulus for GF({p}^{n}); pass one explicitly"
                ) from None
        mod = _trim(c % p for c in modulus)
        if _deg(mod) != n:
            raise ValueError(f"modulus degree {_deg(mod)} != field degree {n}")
        mod = _monic(mod, p)
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")
        self.characteristic = p
        self.degree = n
        self.modulus = mod
        self.order = p ** n
        self._hash = hash((p, n, mod))
        self._build_tables()

    # -- representation plumbing -------------------------------------------

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def n(self) -> int:
        return self.degree

    @property
    def q(self) -> int:
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.characteristic == other.characteristic
                and self.degree == other.degree
                and self.modulus == other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldSpec(GF({self.characteristic}^{self.degree}), q={self.order})"

    def coeffs_of(self, value: int) -> tuple[int, ...]:
        """Canonical length-n coefficient vector (low-to-high) of a value."""
        p, n = self.characteristic, self.degree
        out = []
        for _ in range(n):
            out.append(value % p)
            value //= p
        return tuple(out)

    def value_of(self, coeffs: Iterable[int]) -> int:
        p, n = self.characteristic, self.degree
        cs = list(coeffs)
        if len(cs) > n:
            raise ValueError(f"coefficient vector longer than degree {n}")
        v = 0
        for c in reversed(cs):
            v = v * p + (c % p)
        return v

    # -- arithmetic on packed values ----------------------------------------

    def _build_tables(self):
        p, q = self.characteristic, self.order
        if p == 2:
            self._add_i = int.__xor__
            self._sub_i = int.__xor__
            self._neg_i = lambda a: a
        elif q <= _ADD_TABLE_MAX:
            add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            neg = [self._neg_slow(a) for a in range(q)]
            self._add_i = lambda a, b, _t=add: _t[a][b]
            self._neg_i = lambda a, _t=neg: _t[a]
            self._sub_i = lambda a, b, _t=add, _n=neg: _t[a][_n[b]]
        else:
            self._add_i = self._add_slow
            self._neg_i = self._neg_slow
            self._sub_i = lambda a, b: self._add_slow(a, self._neg_slow(b))
        if q <= _MUL_TABLE_MAX:
            mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_i = lambda a, b, _t=mul: _t[a][b]
            self._exp = None
            self._log = None
        else:
            self._build_log_tables()
            exp, log, m = self._exp, self._log, q - 1
            def _mul(a, b, _e=exp, _l=log, _m=m):
                if a == 0 or b == 0:
                    return 0
                return _e[(_l[a] + _l[b]) % _m]
            self._mul_i = _mul

    def _build_log_tables(self):
        q = self.order
        for g in range(2, q):
            acc, seen = g, 1
            while acc != 1:
                acc = self._mul_slow(acc, g)
                seen += 1
            if seen == q - 1:
                break
        else:  # pragma: no cover - a cyclic group always has a generator
            raise ArithmeticError("no generator found")
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for k in range(q - 1):
            exp[k] = acc
            log[acc] = k
            acc = self._mul_slow(acc, g)
        self._exp = exp
        self._log = log

    def _add_slow(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        return self.value_of(
            (x + y) % self.characteristic
            for x, y in zip(self.coeffs_of(a), self.coeffs_of(b))
        )

    def _neg_slow(self, a: int) -> int:
        p = self.characteristic
        return self.value_of((-c) % p for c in self.coeffs_of(a))

    def _mul_slow(self, a: int, b: int) -> int:
        """Reference multiplication: polynomial product reduced by the modulus."""
        p = self.characteristic
        prod = _poly_mul(_trim(self.coeffs_of(a)), _trim(self.coeffs_of(b)), p)
        return self.value_of(_poly_mod(prod, self.modulus, p))

    def _inv_i(self, a: int) -> int:
        """Inverse by extended Euclid on the coefficient polynomials."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        p = self.characteristic
        r0, r1 = self.modulus, _trim(self.coeffs_of(a))
        t0, t1 = (), (1,)
        while _deg(r1) > 0:
            quo, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _poly_sub(t0, _poly_mul(quo, t1, p), p)
        scale = pow(r1[0], p - 2, p)
        return self.value_of(_poly_mod(_poly_scale(t1, scale, p), self.modulus, p))

    def _pow_i(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self._inv_i(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_i(result, base)
            base = self._mul_i(base, base)
            e >>= 1
        return result

    def _sqrt_i(self, a: int) -> int:
        if self.characteristic != 2:
            raise OddCharacteristic("square roots via Frobenius need characteristic 2")
        return self._pow_i(a, 1 << (self.degree - 1))

    # -- element construction ------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Make an element from a packed value in [0, q) or a coefficient vector."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"value {value} outside [0, {self.order})")
            return FieldElement(self, value)
        return FieldElement(self, self.value_of(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        """The canonical generator: the class of x for n >= 2, else 1."""
        return FieldElement(self, self.characteristic if self.degree >= 2 else 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.order)]

    def format(self, value: int) -> str:
        """Hex without prefix for p = 2, decimal otherwise."""
        return format(value, "x") if self.characteristic == 2 else str(value)


class FieldElement:
    """An immutable field element; arithmetic via the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.value)

    def _coerce(self, other):
        if not isinstance(other, FieldElement):
            return None
        if other.field != self.field:
            raise MixedFields(f"{self!r} and {other!r} live in different fields")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add_i(self.value, other.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub_i(self.value, other.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul_i(self.value, other.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field,
                            self.field._mul_i(self.value, self.field._inv_i(other.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg_i(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow_i(self.value, e))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"GF{self.field.order}({self})"


# ---------------------------------------------------------------------------
# module-level operation surface

def make_field(p: int, n: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Construct and validate GF(p^n); shipped defaults cover p = 2, n <= 8
    and the prime fields GF(3), GF(5), GF(7)."""
    return FieldSpec(p, n, modulus)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field._inv_i(a.value))


def sqrt_char2(a: FieldElement) -> FieldElement:
    """The unique b with b*b = a; squaring is a bijection in GF(2^n)."""
    return FieldElement(a.field, a.field._sqrt_i(a.value))


def elements(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in canonical order: 0 first, 1 second, then by value."""
    return spec.elements()


def _common_field(rows) -> FieldSpec:
    field = None
    for row in rows:
        for entry in row:
            if field is None:
                field = entry.field
            elif entry.field != field:
                raise MixedFields("matrix entries belong to different fields")
    if field is None:
        raise EmptyMatrix("matrix has no entries")
    return field


def solve_homogeneous(matrix: Sequence[Sequence[FieldElement]]) -> list[list[FieldElement]]:
    """Basis of the null space {v : Mv = 0} by exact Gaussian elimination.

    Pivot order is deterministic (leftmost column, lowest row index), and
    the basis vectors come out one per free column, ascending.
    """
    rows = [list(r) for r in matrix]
    if not rows or any(len(r) == 0 for r in rows):
        raise EmptyMatrix("matrix must have at least one row and one column")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    field = _common_field(rows)
    m = [[e.value for e in r] for r in rows]
    mul_i, sub_i, inv_i = field._mul_i, field._sub_i, field._inv_i

    pivot_cols: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        scale = inv_i(m[rank][col])
        m[rank] = [mul_i(scale, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                k = m[r][col]
                m[r] = [sub_i(x, mul_i(k, y)) for x, y in zip(m[r], m[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == len(m):
            break

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [0] * ncols
        vec[free] = 1
        for r, pc in enumerate(pivot_cols):
            vec[pc] = field._neg_i(m[r][free])
        basis.append([FieldElement(field, v) for v in vec])
    return basis
