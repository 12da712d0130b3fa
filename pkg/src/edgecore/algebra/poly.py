"""Monomials and sparse polynomials with exact coefficients."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .fields import FieldMismatch


class Monomial(tuple):
    """Exponent vector.  Tuple comparison gives the lex order used for columns."""

    __slots__ = ()

    def __new__(cls, exps):
        exps = tuple(exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def var(cls, i: int, n: int) -> "Monomial":
        """The variable x_{i+1} (0-based ``i``) in ``n`` variables."""
        e = [0] * n
        e[i] = 1
        return cls(e)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def nvars(self) -> int:
        return len(self)

    def __mul__(self, other):
        if len(self) != len(other):
            raise ValueError("monomials live in different rings")
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)})"

    def __str__(self):
        parts = []
        for i, e in enumerate(self):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


def monomials_of_degree(n: int, deg: int) -> list[Monomial]:
    """All degree-``deg`` monomials in ``n`` variables, in ascending lex order."""
    if deg < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), deg):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(Monomial(e))
    out.sort()
    return out


class Poly:
    """Sparse polynomial: a dict from :class:`Monomial` to nonzero coefficients.

    Treated as immutable once built; arithmetic returns new objects.
    """

    __slots__ = ("terms", "field", "nvars", "_hash")

    def __init__(self, terms, field, nvars: int):
        self.field = field
        self.nvars = nvars
        clean = {}
        for m, c in dict(terms).items():
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} variables")
            c = field(c)
            if c:
                clean[Monomial(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, field, nvars):
        # terms already cleaned: Monomial keys, nonzero coefficients in field
        p = cls.__new__(cls)
        p.terms = terms
        p.field = field
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw({}, field, nvars)

    @classmethod
    def monomial(cls, exps, field, coeff=1):
        m = Monomial(exps)
        return cls({m: coeff}, field, len(m))

    @classmethod
    def var(cls, i, n, field):
        return cls.monomial(Monomial.var(i, n), field)

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in rings with different variable counts")

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out, self.field, self.nvars)

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.field, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Poly.zero(self.field, self.nvars)
        return Poly._raw({m: c * v for m, v in self.terms.items()}, self.field, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                v = out.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly._raw(out, self.field, self.nvars)

    __rmul__ = scale

    def times_monomial(self, m: Monomial):
        return Poly._raw({t * m: c for t, c in self.terms.items()}, self.field, self.nvars)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms with the lex-greatest monomial first."""
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            ms = str(m)
            if c == 1:
                s = ms
            elif c == -1:
                s = "-" + ms
            else:
                s = f"{c}*{ms}" if ms != "1" else str(c)
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")


def poly_mul(f: Poly, g: Poly) -> Poly:
    """Exact product; raises :class:`FieldMismatch` across fields."""
    return f * g
