"""Homogeneous ideals handled one graded piece at a time.

Every question asked here concerns ideals generated in known low degrees,
so the degree-k piece is spanned by (generator) x (monomial of complementary
degree) and exact linear algebra on those spans replaces normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import QQ, Mat, Monomial, Poly, RowSpace, intersect_spaces, left_kernel, monomials_of_degree
from .algebra.fields import FieldMismatch
from .graph import Graph


@dataclass(frozen=True)
class GradedIdeal:
    generators: tuple[Poly, ...]
    n: int
    field: object

    def __post_init__(self):
        for g in self.generators:
            if not g:
                raise ValueError("zero generator")
            if not g.is_homogeneous:
                raise ValueError(f"generator {g} is not homogeneous")
            if g.nvars != self.n:
                raise ValueError("generator lives in the wrong ring")
            if g.field is not self.field:
                raise FieldMismatch("generator over a different field")

    @classmethod
    def from_polys(cls, polys, n: int, field) -> "GradedIdeal":
        """Drop zeros and exact duplicates, keep first-seen order."""
        gens = tuple(dict.fromkeys(p for p in polys if p))
        return cls(gens, n, field)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GradedIdeal({', '.join(map(str, self.generators))})"


@dataclass(frozen=True, eq=False)
class GradedPiece:
    degree: int
    n: int
    field: object
    space: RowSpace

    @property
    def dim(self) -> int:
        return self.space.rank

    def contains(self, f: Poly) -> bool:
        return f.terms in self.space if f else True

    def __contains__(self, f):
        return self.contains(f)

    def contains_piece(self, other: "GradedPiece") -> bool:
        return self.space.contains_space(other.space)

    def __eq__(self, other):
        if not isinstance(other, GradedPiece):
            return NotImplemented
        return self.degree == other.degree and self.n == other.n and self.space == other.space

    def columns(self) -> list[Monomial]:
        return monomials_of_degree(self.n, self.degree)

    @property
    def basis(self) -> Mat:
        """Dense reduced row-echelon basis; columns are :meth:`columns` (lex order)."""
        cols = self.columns()
        z = self.field.zero
        return Mat([[row.get(m, z) for m in cols] for row in self.space.rows()], self.field, len(cols))

    def polys(self) -> list[Poly]:
        return [Poly._raw(dict(r), self.field, self.n) for r in self.space.rows()]

    def __repr__(self):
        return f"GradedPiece(degree={self.degree}, dim={self.dim})"


def edge_ideal(g: Graph, field=QQ) -> GradedIdeal:
    """Generator i is x_u * x_v for edge i of ``g``."""
    gens = []
    for u, v in g.edges:
        e = [0] * g.n
        e[u] += 1
        e[v] += 1
        gens.append(Poly.monomial(e, field))
    return GradedIdeal(tuple(gens), g.n, field)


def edge_polys(g: Graph, field=QQ) -> list[Poly]:
    return list(edge_ideal(g, field).generators)


def maximal_ideal(n: int, field=QQ) -> GradedIdeal:
    return GradedIdeal(tuple(Poly.var(i, n, field) for i in range(n)), n, field)


def unit_ideal(n: int, field=QQ) -> GradedIdeal:
    return GradedIdeal((Poly.monomial(Monomial.one(n), field),), n, field)


def _check_same_ring(a: GradedIdeal, b: GradedIdeal):
    if a.n != b.n:
        raise ValueError(f"ideals live in rings with {a.n} and {b.n} variables")
    if a.field is not b.field:
        raise FieldMismatch(f"ideals over {a.field} and {b.field}")


@lru_cache(maxsize=4096)
def graded_piece(I: GradedIdeal, deg: int) -> GradedPiece:
    space = RowSpace(I.field)
    if deg >= 0:
        for g in I.generators:
            k = deg - g.degree
            if k < 0:
                continue
            if k == 0:
                space.add(g.terms)
                continue
            for m in monomials_of_degree(I.n, k):
                space.add(g.times_monomial(m).terms)
    return GradedPiece(deg, I.n, I.field, space)


def product(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    _check_same_ring(I, J)
    return GradedIdeal.from_polys((f * g for f in I.generators for g in J.generators), I.n, I.field)


@lru_cache(maxsize=256)
def power(I: GradedIdeal, r: int) -> GradedIdeal:
    if r < 0:
        raise ValueError("negative power")
    if r == 0:
        return unit_ideal(I.n, I.field)
    if r == 1:
        return I
    return product(power(I, r - 1), I)


def mu_power(I: GradedIdeal, r: int) -> int:
    """Minimal number of generators of I^r for I generated in a single degree."""
    degs = {g.degree for g in I.generators}
    if len(degs) != 1:
        raise ValueError("mu_power needs an ideal generated in a single degree")
    return graded_piece(power(I, r), r * degs.pop()).dim


def contains_homogeneous(I: GradedIdeal, f: Poly) -> bool:
    if not f:
        return True
    if not f.is_homogeneous:
        raise ValueError(f"{f} is not homogeneous")
    return graded_piece(I, f.degree).contains(f)


def pieces_equal(A: GradedIdeal, B: GradedIdeal, up_to: int) -> bool:
    """Graded pieces agree in every degree <= ``up_to``.

    Certifies A == B when both are generated in degrees <= ``up_to``.
    """
    _check_same_ring(A, B)
    return all(graded_piece(A, k) == graded_piece(B, k) for k in range(up_to + 1))


def intersect_pieces(ideals, deg: int) -> GradedPiece:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersect_pieces needs at least one ideal")
    for J in ideals[1:]:
        _check_same_ring(ideals[0], J)
    space = intersect_spaces([graded_piece(J, deg).space for J in ideals])
    return GradedPiece(deg, ideals[0].n, ideals[0].field, space)


def colon_piece(J: GradedIdeal, I: GradedIdeal, deg: int) -> GradedPiece:
    """Degree-``deg`` part of J : I, i.e. forms f with f*g in J for every generator g of I."""
    _check_same_ring(J, I)
    if deg < 0:
        raise ValueError("negative degree")
    basis = monomials_of_degree(I.n, deg)
    targets = [graded_piece(J, deg + g.degree) for g in I.generators]
    residues = []
    for m in basis:
        vec = {}
        for k, (g, piece) in enumerate(zip(I.generators, targets)):
            r = piece.space.reduce(g.times_monomial(m).terms)
            vec.update(((k, mono), c) for mono, c in r.items())
        residues.append(vec)
    space = RowSpace(I.field)
    for lam in left_kernel(residues, I.field):
        space.add({basis[i]: c for i, c in lam.items()})
    return GradedPiece(deg, I.n, I.field, space)
