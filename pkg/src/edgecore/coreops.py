"""Core of an edge ideal: exclusion from mI, the whiskered-cycle formula,
finite intersections over even cycles, and the linear-syzygy matrices
behind the colon computation J : I = m.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from math import prod

from .algebra import QQ, Mat, Poly, RowSpace, determinant, left_kernel, monomials_of_degree
from .graph import (
    Classification,
    Graph,
    Kind,
    NotApplicable,
    classify,
    counterexample_graph,
    find_even_closed_walk,
    in_cycle_normal_form,
    is_whiskered,
)
from .ideal import (
    GradedIdeal,
    colon_piece,
    contains_homogeneous,
    edge_ideal,
    graded_piece,
    intersect_pieces,
    maximal_ideal,
    product,
)
from .reductions import Family, ReductionCandidate, build_family, is_reduction, reduction_number


class FamilyFailure(RuntimeError):
    """A family member that should be a reduction failed verification."""


# --- reports -----------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeRow:
    deg: int
    core_dim: int
    mI_dim: int
    equal: bool


@dataclass
class CoreReport:
    method: str  # whiskered_formula | finite_intersection | exclusion_only
    field: str
    char: int
    d: int | None
    families: list[str]
    degrees: list[DegreeRow]
    verdict: str  # equal | unequal | upper-bound-only
    notes: list[str] = dc_field(default_factory=list)

    @property
    def n_half(self):
        return None if self.d is None else self.d // 2

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "field": self.field,
            "char": self.char,
            "d": self.d,
            "families": list(self.families),
            "degrees": [{"deg": r.deg, "core_dim": r.core_dim, "mI_dim": r.mI_dim, "equal": r.equal}
                        for r in self.degrees],
            "verdict": self.verdict,
            "n_half": self.n_half,
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@dataclass(frozen=True)
class WhiskerData:
    d: int
    attachment: dict  # whisker edge j (> d) -> cycle vertex i_j (1..d)

    @classmethod
    def of(cls, g: Graph, c: Classification | None = None) -> "WhiskerData":
        c = classify(g) if c is None else c
        if not is_whiskered(g, c) or not in_cycle_normal_form(g, c):
            raise NotApplicable("expected a whiskered even cycle in standard numbering "
                                "(cycle on x_1..x_d, leaf of e_j is x_j)")
        att = {}
        for j in range(c.d + 1, g.s + 1):
            u, v = sorted(g.edge(j))
            if u >= c.d or v != j - 1:
                raise NotApplicable(f"edge e{j} is not x_i x_{j} with i on the cycle")
            att[j] = u + 1
        return cls(c.d, att)


def _mod(i: int, d: int) -> int:
    # residues in 1..d, with 0 read as d
    return (i - 1) % d + 1


# --- mI and the whiskered formula ---------------------------------------------------

def m_times_I(I: GradedIdeal) -> GradedIdeal:
    return product(maximal_ideal(I.n, I.field), I)


def core_whiskered(g: Graph, field=QQ) -> GradedIdeal:
    """core(I) = mI for an even cycle with any whiskers."""
    if not is_whiskered(g):
        raise NotApplicable("not an even cycle with whiskers")
    return m_times_I(edge_ideal(g, field))


def colon_is_m(c: ReductionCandidate, I: GradedIdeal) -> bool:
    """J : I is the maximal ideal: every variable lies in the colon and J != I."""
    J = c.ideal(I)
    if graded_piece(J, 2) == graded_piece(I, 2):
        return False
    return colon_piece(J, I, 1).dim == I.n


# --- exclusion: every edge misses some reduction -------------------------------------

@dataclass(frozen=True)
class ExclusionRow:
    edge: int
    position: int | None  # first position on the walk, None when off the walk
    witness: str
    excluded: bool


@dataclass
class ExclusionReport:
    walk: tuple[int, ...]
    verified: dict
    rows: list[ExclusionRow]

    @property
    def all_excluded(self) -> bool:
        return all(r.excluded for r in self.rows) and all(self.verified.values())

    def to_dict(self) -> dict:
        return {"walk": list(self.walk), "witnesses_verified": dict(self.verified),
                "edges": [{"edge": r.edge, "position": r.position, "witness": r.witness,
                           "excluded": r.excluded} for r in self.rows],
                "all_excluded": self.all_excluded}


def exclusion_check(g: Graph, field=QQ, verify: bool = True) -> ExclusionReport:
    """Witness, for each edge e_i, a walk-built reduction not containing e_i.

    Odd walk positions use the candidate keeping even positions pure; even
    positions the one keeping odd positions pure.  Edges off the walk must be
    missing from both.
    """
    c = classify(g)
    if c.is_basic:
        raise NotApplicable("edge ideal is basic: its only reduction is itself")
    walk = find_even_closed_walk(g).edge_sequence
    I = edge_ideal(g, field)
    cand = {tag: build_family(Family(tag), g, field, c) for tag in ("even-walk", "odd-walk")}
    ideals = {tag: x.ideal(I) for tag, x in cand.items()}
    verified = {}
    for tag, x in cand.items():
        if verify:
            verified[tag] = reduction_number(x, I, r_max=len(walk) // 2) is not None
        else:
            verified[tag] = True
    first = {}
    for pos, e in enumerate(walk, start=1):
        first.setdefault(e, pos)
    rows = []
    for i, e in enumerate(I.generators, start=1):
        pos = first.get(i)
        if pos is None:
            tags = ("even-walk", "odd-walk")
        else:
            tags = ("even-walk",) if pos % 2 else ("odd-walk",)
        excluded = all(not contains_homogeneous(ideals[t], e) for t in tags)
        rows.append(ExclusionRow(i, pos, "+".join(tags), excluded))
    return ExclusionReport(walk, verified, rows)


# --- linear syzygies and the B matrix ----------------------------------------------

def psi_columns(g: Graph, field=QQ) -> list[dict]:
    """Linear relations on e_1..e_s as columns {generator index: linear form}.

    Cycle relations come first (d of them), then two per whisker.
    """
    w = WhiskerData.of(g)
    d, s, n = w.d, g.s, g.n
    x = lambda i: Poly.var(i - 1, n, field)  # noqa: E731
    cols = []
    for i in range(1, d + 1):
        cols.append({_mod(i - 1, d): -x(_mod(i + 1, d)), i: x(_mod(i - 1, d))})
    for j in range(d + 1, s + 1):
        ij = w.attachment[j]
        cols.append({_mod(ij - 1, d): x(j), j: -x(_mod(ij - 1, d))})
    for j in range(d + 1, s + 1):
        ij = w.attachment[j]
        cols.append({ij: x(j), j: -x(_mod(ij + 1, d))})
    return cols


def apply_relation(I: GradedIdeal, col: dict) -> Poly:
    total = Poly.zero(I.field, I.n)
    for i, f in col.items():
        total = total + f * I.generators[i - 1]
    return total


def linear_syzygy_dim(I: GradedIdeal) -> int:
    """Dimension of the kernel of (l_1..l_s) -> sum l_i e_i, l_i linear forms."""
    vecs = []
    lin = monomials_of_degree(I.n, 1)
    for e in I.generators:
        for k in range(I.n):
            vecs.append(e.times_monomial(lin[k]).terms)
    return len(left_kernel(vecs, I.field))


def check_psi(g: Graph, field=QQ) -> tuple[bool, int, int]:
    """(all columns are relations, rank of the columns, dim of all linear relations)."""
    I = edge_ideal(g, field)
    cols = psi_columns(g, field)
    ok = all(not apply_relation(I, c) for c in cols)
    space = RowSpace(field)
    for c in cols:
        space.add({(i, m): v for i, f in c.items() for m, v in f.terms.items()})
    return ok, space.rank, linear_syzygy_dim(I)


def psi_B_matrix(g: Graph, b, field=QQ) -> Mat:
    """B with (row k) . (x_1..x_s) = -(b . column k of psi)."""
    w = WhiskerData.of(g)
    d, s = w.d, g.s
    b = [field(v) for v in b]
    if len(b) != s:
        raise ValueError(f"need {s} values of b, got {len(b)}")
    z = field.zero
    B = lambda k: b[k - 1]  # noqa: E731
    rows = []
    for i in range(1, d + 1):
        r = [z] * s
        r[_mod(i + 1, d) - 1] += B(_mod(i - 1, d))
        r[_mod(i - 1, d) - 1] -= B(i)
        rows.append(r)
    for j in range(d + 1, s + 1):
        ij = w.attachment[j]
        r = [z] * s
        r[_mod(ij - 1, d) - 1] = B(j)
        r[j - 1] = -B(_mod(ij - 1, d))
        rows.append(r)
    for j in range(d + 1, s + 1):
        ij = w.attachment[j]
        r = [z] * s
        r[_mod(ij + 1, d) - 1] = B(j)
        r[j - 1] = -B(ij)
        rows.append(r)
    return Mat(rows, field, s)


def b_from_psi(cols: list[dict], b, n: int, field=QQ) -> Mat:
    """Coefficient rows of -(sum_i b_i psi_{i,k}) in x_1..x_n, one per column k."""
    rows = []
    for col in cols:
        r = [field.zero] * n
        for i, f in col.items():
            for m, v in f.terms.items():
                r[m.index(1)] -= field(b[i - 1]) * v
        rows.append(r)
    return Mat(rows, field, n)


def detB_closed_form(b, field=QQ):
    b = [field(v) for v in b]
    if len(b) % 2 or len(b) < 4:
        raise ValueError("need an even number (>= 4) of entries")
    return (prod(b[0::2], start=field.one) - prod(b[1::2], start=field.one)) ** 2


def maximal_minors(B: Mat) -> list:
    """All k x k minors of a (k + r) x k matrix (rows dropped, columns kept)."""
    from itertools import combinations
    k = B.ncols
    return [determinant(B.submatrix(rows)) for rows in combinations(range(B.nrows), k)]


# --- finite intersections over a bare even cycle ----------------------------------

def choose_cycle_families(d: int, field) -> tuple[str, list[Family]]:
    """Pick the family whose intersection is mI, according to char and n = d/2."""
    p, n = field.char, d // 2
    if p != 2 and (p == 0 or n % p != 1):
        return "jt", [Family("jt", t) for t in range(1, d + 1)]
    fams = [Family("h", i) for i in range(1, d + 1)] + [Family("l", 2 * t) for t in range(1, n + 1)]
    return "h+l", fams


def intersection_table(g: Graph, field, families, degrees, require_reduction=True,
                       cls: Classification | None = None) -> tuple[list[DegreeRow], list]:
    cls = classify(g) if cls is None else cls
    I = edge_ideal(g, field)
    mI = m_times_I(I)
    r = cls.d // 2 - 1
    ideals = []
    for fam in families:
        c = build_family(fam, g, field, cls)
        if require_reduction and not is_reduction(c, I, r):
            raise FamilyFailure(f"{fam} over {field} is not a reduction")
        ideals.append(c.ideal(I))
    rows = []
    for k in degrees:
        cap = intersect_pieces(ideals, k)
        m = graded_piece(mI, k)
        rows.append(DegreeRow(k, cap.dim, m.dim, cap == m))
    return rows, ideals


def finite_intersection_core(g: Graph, field=QQ, max_deg: int = 4, experimental: bool = False) -> CoreReport:
    """Intersect the characteristic-appropriate family and compare with mI degreewise.

    Every member is homogeneous, so the same table describes the graded core.
    With ``experimental`` a whiskered cycle is accepted; the intersection is
    then only an upper bound and no verdict is given.
    """
    if max_deg < 3:
        raise ValueError("max_deg must be at least 3 (mI is generated in degree 3)")
    cls = classify(g)
    notes = []
    if cls.kind is Kind.UNIQUE_EVEN_CYCLE:
        label, fams = choose_cycle_families(cls.d, field)
        rows, _ = intersection_table(g, field, fams, range(2, max_deg + 1), cls=cls)
        verdict = "equal" if all(r.equal for r in rows) else "unequal"
        notes.append("all family members are homogeneous, so the table also describes the graded core")
        if field.char:
            notes.append("over a finite field the intersection runs over the named family only")
        method = "finite_intersection"
    elif experimental and is_whiskered(g, cls):
        fams = [Family("basic", t) for t in cls.cycle_edges]
        fams += [Family(tag, k) for tag in ("odd-walk", "even-walk") for k in range(cls.d)]
        rows, _ = intersection_table(g, field, fams, range(2, max_deg + 1), cls=cls)
        verdict = "upper-bound-only"
        notes.append("experimental: no theorem covers this family on a whiskered cycle")
        method = "finite_intersection"
    else:
        raise NotApplicable(f"finite-intersection core needs a bare even cycle, got {cls.kind.value}")
    return CoreReport(method, field.name, field.char, cls.d, [str(f) for f in fams], rows, verdict, notes)


def whiskered_core_report(g: Graph, field=QQ, max_deg: int = 4) -> CoreReport:
    """Report core = mI on a whiskered cycle, cross-checked against verified reductions."""
    cls = classify(g)
    if not is_whiskered(g, cls):
        raise NotApplicable("not an even cycle with whiskers")
    fams = [Family("basic", t) for t in cls.cycle_edges]
    fams += [Family(tag, k) for tag in ("odd-walk", "even-walk") for k in range(cls.d)]
    rows, _ = intersection_table(g, field, fams, range(2, max_deg + 1), cls=cls)
    # the intersection of finitely many reductions contains the core, so it must contain mI
    mI = core_whiskered(g, field)
    rows = [DegreeRow(r.deg, graded_piece(mI, r.deg).dim, r.mI_dim, r.equal) for r in rows]
    notes = ["core dims come from the whiskered formula core = mI",
             f"cross-check: intersection of {len(fams)} verified reductions "
             + ("matches" if all(r.equal for r in rows) else "does not match") + " mI in every degree"]
    if field.char:
        notes.append("the formula is proved over infinite fields; finite-field runs are a consistency check")
    return CoreReport("whiskered_formula", field.name, field.char, cls.d, [str(f) for f in fams], rows,
                      "equal", notes)


# --- the six-edge graph where core != mI ---------------------------------------------

COUNTEREXAMPLE_PSI = [
    # rows e1..e6, columns are the seven linear relations; entries (var index, sign)
    [(4, 1), (3, -1), None, None, None, None, None],
    [None, (1, 1), (4, -1), None, None, None, None],
    [None, None, (2, 1), (1, -1), None, (5, 1), None],
    [(2, -1), None, None, (3, 1), (5, -1), None, None],
    [None, None, None, None, (1, 1), (3, -1), (6, 1)],
    [None, None, None, None, None, None, (4, -1)],
]


def counterexample_psi(field=QQ) -> list[dict]:
    cols = []
    for k in range(7):
        col = {}
        for i, row in enumerate(COUNTEREXAMPLE_PSI, start=1):
            if row[k] is not None:
                v, sign = row[k]
                col[i] = Poly.var(v - 1, 6, field).scale(field(sign))
        cols.append(col)
    return cols


def counterexample_B(b, field=QQ) -> Mat:
    b1, b2, b3, b4, b5, b6 = (field(v) for v in b)
    z = field.zero
    return Mat([
        [z, b4, z, -b1, z, z],
        [-b2, z, b1, z, z, z],
        [z, -b3, z, b2, z, z],
        [b3, z, -b4, z, z, z],
        [-b5, z, z, z, b4, z],
        [z, z, b5, z, -b3, z],
        [z, z, z, b6, z, -b5],
    ], field, 6)


COUNTEREXAMPLE_H = ReductionCandidate(2, (1, -1, 1, 1, 0, 1), QQ, "h-counterexample")


@dataclass
class CounterexampleReport:
    h_is_reduction: bool
    colon_basis: list[str]
    witness: str | None
    minors_vanish_when_b5_zero: bool
    minor_nonzero_generic: bool
    minors_divisible: bool
    samples: int
    core: CoreReport

    def to_dict(self) -> dict:
        return {"h_generators": ["e1+e2", "e3+e2", "e4+e2", "e5", "e6+e2"],
                "h_is_reduction": self.h_is_reduction,
                "colon_basis": self.colon_basis,
                "colon_dim": len(self.colon_basis),
                "witness_in_mI_not_in_H": self.witness,
                "minors": {"samples": self.samples,
                           "all_vanish_when_b5_zero": self.minors_vanish_when_b5_zero,
                           "some_nonzero_when_b5_nonzero": self.minor_nonzero_generic,
                           "divisible_by_b5_q_squared": self.minors_divisible},
                "core": self.core.to_dict()}


def _random_b(rng, b5_zero: bool):
    while True:
        b = [QQ.random_nonzero(rng) for _ in range(6)]
        if b5_zero:
            b[4] = QQ.zero
        if b[0] * b[2] != b[1] * b[3]:
            return b


def counterexample_report(samples: int = 20, seed: int = 0) -> CounterexampleReport:
    g = counterexample_graph()
    I = edge_ideal(g, QQ)
    H = COUNTEREXAMPLE_H
    h_red = is_reduction(H, I, 1)
    colon = colon_piece(H.ideal(I), I, 1)
    basis = sorted((str(p) for p in colon.polys()), key=lambda v: int(v[1:]))
    HJ = H.ideal(I)
    witness = None
    for e in I.generators:
        for k in range(I.n):
            f = e * Poly.var(k, I.n, QQ)
            if not contains_homogeneous(HJ, f):
                witness = str(f)
                break
        if witness:
            break
    rng = random.Random(seed)
    vanish = generic = divisible = True
    for _ in range(samples):
        minors = maximal_minors(counterexample_B(_random_b(rng, True)))
        vanish &= all(m == 0 for m in minors)
        b = _random_b(rng, False)
        minors = maximal_minors(counterexample_B(b))
        generic &= any(m != 0 for m in minors)
        factor = b[4] * (b[0] * b[2] - b[1] * b[3]) ** 2
        divisible &= all((m / factor).denominator == 1 for m in minors)
    # core is inside H, which misses an element of mI
    cls = classify(g)
    fams = [Family("odd-walk"), Family("even-walk")]
    ideals = [HJ] + [build_family(f, g, QQ, cls).ideal(I) for f in fams]
    mI = m_times_I(I)
    rows = []
    for k in (2, 3):
        cap = intersect_pieces(ideals, k)
        m = graded_piece(mI, k)
        rows.append(DegreeRow(k, cap.dim, m.dim, cap == m))
    report = CoreReport("exclusion_only", QQ.name, 0, cls.d, ["h"] + [str(f) for f in fams], rows,
                        "unequal" if witness else "upper-bound-only",
                        ["core lies in every reduction, H misses an element of mI, so mI is not in the core"])
    return CounterexampleReport(h_red, basis, witness, vanish, generic, divisible, samples, report)
