"""Reduction candidates J = (e_1 + a_1 e_t, ..., e_s + a_s e_t) of an edge ideal.

A candidate stores the distinguished index ``t`` (1-based) and constant
coefficients ``a_1..a_s`` with ``a_t = -1``; the generator at ``t`` vanishes,
leaving s - 1 generators.  Coefficients are field constants: in the cases
handled here a coefficient in the maximal ideal may be replaced by 0 without
changing the reduction, so nothing is lost.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb, prod

from .algebra import QQ, Mat, Poly, row_reduce
from .graph import Classification, Graph, Kind, NotApplicable, classify, find_even_closed_walk
from .ideal import GradedIdeal, edge_ideal, graded_piece, power, product


class NotMinimallyGenerated(ValueError):
    pass


@dataclass(frozen=True)
class ReductionCandidate:
    t: int
    coeffs: tuple
    field: object = QQ
    provenance: str = "custom"

    def __post_init__(self):
        coeffs = tuple(self.field(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not 1 <= self.t <= len(coeffs):
            raise ValueError(f"t={self.t} outside 1..{len(coeffs)}")
        if coeffs[self.t - 1] != -1:
            raise ValueError(f"a_t must be -1, got a_{self.t} = {coeffs[self.t - 1]}")

    @property
    def s(self) -> int:
        return len(self.coeffs)

    def a(self, i: int):
        """Coefficient a_i (1-based)."""
        return self.coeffs[i - 1]

    def generators(self, I: GradedIdeal) -> list[Poly]:
        """e_i + a_i e_t for i != t, in order (repeats kept)."""
        if len(I.generators) != self.s:
            raise ValueError(f"candidate has {self.s} coefficients, ideal has {len(I.generators)} generators")
        if I.field is not self.field:
            raise ValueError(f"candidate over {self.field}, ideal over {I.field}")
        et = I.generators[self.t - 1]
        return [e + et.scale(a) for i, (e, a) in enumerate(zip(I.generators, self.coeffs), start=1)
                if i != self.t]

    def ideal(self, I: GradedIdeal) -> GradedIdeal:
        return GradedIdeal.from_polys(self.generators(I), I.n, I.field)

    def as_dict(self) -> dict:
        return {"t": self.t, "coeffs": [str(a) for a in self.coeffs], "field": str(self.field),
                "provenance": self.provenance}

    def __str__(self):
        return f"t={self.t} a=({', '.join(str(a) for a in self.coeffs)}) over {self.field}"


def parse_candidate(text: str, s: int, field=QQ) -> ReductionCandidate:
    """Parse ``t=<index>`` followed by one line of comma-separated constants."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    t = None
    values = None
    for ln in lines:
        if ln.lower().startswith("t="):
            if t is not None:
                raise ValueError("duplicate t= header")
            try:
                t = int(ln[2:])
            except ValueError:
                raise ValueError(f"bad t= header {ln!r}") from None
        elif values is None:
            values = [v.strip() for v in ln.split(",")]
        else:
            raise ValueError("expected a single coefficient line")
    if t is None:
        raise ValueError("missing t= header")
    if values is None:
        raise ValueError("missing coefficient line")
    if len(values) != s:
        raise ValueError(f"expected {s} coefficients, got {len(values)}")
    try:
        coeffs = [field.parse(v) for v in values]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"non-constant or malformed coefficient in {values}") from None
    if not 1 <= t <= s:
        raise ValueError(f"t={t} outside 1..{s}")
    if coeffs[t - 1] != -1:
        raise ValueError(f"position {t} is {values[t - 1]} not -1")
    minus_ones = [i for i, a in enumerate(coeffs, start=1) if a == -1]
    if len(minus_ones) != 1 and field.char != 2:
        # over F_2, -1 = 1 so every unit coefficient reads as -1
        raise ValueError(f"-1 must appear exactly once (at t), found at positions {minus_ones}")
    return ReductionCandidate(t, tuple(coeffs), field, "file")


# --- canonical form --------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Generating set h_i + sum_j a_{i,j} h_{t_j} recovered from a coefficient matrix."""

    distinguished: tuple[int, ...]
    pivots: tuple[int, ...]
    coeffs: tuple[tuple, ...]  # s rows, one column per distinguished index
    candidate: ReductionCandidate | None = None


def canonical_form(coeff_matrix: Mat, s: int | None = None) -> CanonicalForm:
    """Row-reduce the coefficient matrix of a candidate generating set.

    Rows are generators written in terms of h_1..h_s.  Non-pivot columns of the
    reduced form are the distinguished indices t_1..t_k; each generator then
    reads h_p + sum_j a_{p,j} h_{t_j}, and a_{t_i,j} = -delta_ij.  With a
    single distinguished index this is a :class:`ReductionCandidate`.
    """
    s = coeff_matrix.ncols if s is None else s
    if coeff_matrix.ncols != s:
        raise ValueError(f"matrix has {coeff_matrix.ncols} columns, expected {s}")
    rref, rk, pivots = row_reduce(coeff_matrix)
    if rk < coeff_matrix.nrows or rk == 0:
        raise NotMinimallyGenerated(
            f"not minimally generated: rank {rk} < {coeff_matrix.nrows} generators")
    field = coeff_matrix.field
    dist = tuple(j for j in range(s) if j not in pivots)
    rows = []
    for i in range(s):
        if i in pivots:
            r = rref.rows[pivots.index(i)]
            rows.append(tuple(r[j] for j in dist))
        else:
            rows.append(tuple(-field.one if j == i else field.zero for j in dist))
    cand = None
    if len(dist) == 1:
        cand = ReductionCandidate(dist[0] + 1, tuple(r[0] for r in rows), field, "canonical")
    return CanonicalForm(tuple(j + 1 for j in dist), tuple(p + 1 for p in pivots), tuple(rows), cand)


def candidate_matrix(c: ReductionCandidate) -> Mat:
    """(s-1) x s coefficient matrix of the generators e_i + a_i e_t, i != t."""
    f = c.field
    rows = []
    for i in range(1, c.s + 1):
        if i == c.t:
            continue
        row = [f.zero] * c.s
        row[i - 1] = f.one
        row[c.t - 1] = row[c.t - 1] + c.a(i)
        rows.append(row)
    return Mat(rows, f, c.s)


# --- families --------------------------------------------------------------------

FAMILY_TAGS = ("basic", "jt", "l", "h", "odd-walk", "even-walk")


@dataclass(frozen=True)
class Family:
    """Named candidate family.  ``index`` is t for basic (an edge number), the
    cycle position for jt/l/h, and the rotation of the walk for the walk families."""

    tag: str
    index: int = 0

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}; choose from {FAMILY_TAGS}")

    def __str__(self):
        if self.tag in ("odd-walk", "even-walk"):
            return self.tag if not self.index else f"{self.tag}@{self.index}"
        return f"{self.tag}({self.index})"


def _require_bare_cycle(cls: Classification, what: str):
    if cls.kind is not Kind.UNIQUE_EVEN_CYCLE:
        raise NotApplicable(f"{what} is defined for a bare even cycle, not {cls.kind.value}")


def _cycle_family(cls: Classification, pos: int, rule, field, tag) -> ReductionCandidate:
    d = cls.d
    if not 1 <= pos <= d:
        raise NotApplicable(f"{tag} index {pos} outside 1..{d}")
    coeffs = [field.one] * cls.s
    for k, e in enumerate(cls.cycle_edges, start=1):
        coeffs[e - 1] = field(-1 if k == pos else rule(k))
    return ReductionCandidate(cls.cycle_edges[pos - 1], tuple(coeffs), field, tag)


def walk_coefficients(g: Graph, walk_edges, field=QQ, odd_pure=True) -> ReductionCandidate:
    """Walk-based candidate for an irreducible even closed walk w_1..w_d.

    ``odd_pure=True``: odd positions stay pure e_{w_i}, even positions get
    +e_{w_d} (or cancel, when w_i = w_d).  ``odd_pure=False``: odd positions get
    +e_{w_d}, even ones stay pure (or vanish, when w_i = w_d).  Edges off the
    walk always get +e_{w_d}.
    """
    walk_edges = tuple(walk_edges)
    t = walk_edges[-1]
    coeffs = [field.one] * g.s
    parity = {}
    for pos, e in enumerate(walk_edges, start=1):
        if parity.setdefault(e, pos % 2) != pos % 2:
            raise NotApplicable(f"walk repeats e{e} at positions of different parity")
    for e, par in parity.items():
        odd = par == 1
        coeffs[e - 1] = field.zero if odd == odd_pure else field.one
    coeffs[t - 1] = -field.one
    tag = "odd-walk" if odd_pure else "even-walk"
    return ReductionCandidate(t, tuple(coeffs), field, tag)


def build_family(kind: Family, g: Graph, field=QQ, cls: Classification | None = None) -> ReductionCandidate:
    cls = classify(g) if cls is None else cls
    tag, k = kind.tag, kind.index
    if tag in ("odd-walk", "even-walk"):
        if cls.is_basic:
            raise NotApplicable("graph is of linear type: no even closed walk")
        walk = find_even_closed_walk(g).edge_sequence
        r = k % len(walk)
        walk = walk[r:] + walk[:r]
        return walk_coefficients(g, walk, field, odd_pure=(tag == "odd-walk"))
    if not cls.has_unique_even_cycle:
        raise NotApplicable(f"family {tag} needs a unique even cycle")
    if tag == "basic":
        if k not in cls.cycle_edges:
            # with t off the cycle every cycle coefficient is 1 and the products agree
            raise NotApplicable(f"basic index {k} must be a cycle edge {list(cls.cycle_edges)}")
        coeffs = [field.one] * cls.s
        coeffs[k - 1] = -field.one
        return ReductionCandidate(k, tuple(coeffs), field, "basic")
    _require_bare_cycle(cls, f"family {tag}")
    if tag == "jt":
        return _cycle_family(cls, k, lambda i: 1, field, "jt")
    if tag == "l":
        if k % 2:
            raise NotApplicable(f"L family needs an even index, got {k}")
        return _cycle_family(cls, k, lambda i: 0 if i % 2 else 1, field, "l")
    # h: pure on the opposite parity class of the index, +e_t on the same class
    return _cycle_family(cls, k, lambda i: 0 if i % 2 == k % 2 else 1, field, "h")


def cycle_families(cls: Classification, field=QQ, g: Graph | None = None) -> dict[str, list[Family]]:
    """The three named families on a bare even cycle C_d."""
    d = cls.d
    return {
        "jt": [Family("jt", t) for t in range(1, d + 1)],
        "h": [Family("h", i) for i in range(1, d + 1)],
        "l": [Family("l", 2 * t) for t in range(1, d // 2 + 1)],
    }


# --- obstruction and verification ---------------------------------------------------

def obstruction_check(c: ReductionCandidate, cls: Classification) -> bool:
    """True when prod of odd-position cycle coefficients equals the even one.

    True certifies that the candidate is not a reduction.
    """
    if not cls.has_unique_even_cycle:
        raise NotApplicable("obstruction test needs a unique even cycle")
    if c.s != cls.s:
        raise ValueError("candidate and graph disagree on the number of edges")
    odd = prod((c.a(e) for e in cls.cycle_edges[0::2]), start=c.field.one)
    even = prod((c.a(e) for e in cls.cycle_edges[1::2]), start=c.field.one)
    return odd == even


def is_reduction(c: ReductionCandidate, I: GradedIdeal, r: int) -> bool:
    """I^{r+1} == J I^r, compared in degree 2r+2 where both are generated."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    J = c.ideal(I)
    deg = 2 * r + 2
    lhs = graded_piece(product(J, power(I, r)), deg)
    rhs = graded_piece(power(I, r + 1), deg)
    return lhs.dim == rhs.dim and lhs == rhs


def reduction_number(c: ReductionCandidate, I: GradedIdeal, r_max: int | None = None,
                     cls: Classification | None = None) -> int | None:
    """Least r <= r_max with I^{r+1} = J I^r, or None."""
    if r_max is None:
        r_max = cls.d // 2 if cls is not None and cls.d else c.s
    for r in range(0, r_max + 1):
        if is_reduction(c, I, r):
            return r
    return None


def k_generators(c: ReductionCandidate, I: GradedIdeal, r: int) -> list[Poly]:
    """Products (e_i + a_i e_t) e_{i_1} ... e_{i_{r-1}} with i <= i_1 <= ... <= i_{r-1}.

    Indices run over an ordering of the generators with e_t moved last; the
    list has binom(s+r-1, r) - 1 entries and spans J I^{r-1}.
    """
    if r < 2:
        raise ValueError("k_generators needs r >= 2")
    e = I.generators
    s = c.s
    order = [i for i in range(1, s + 1) if i != c.t] + [c.t]
    et = e[c.t - 1]
    out = []
    for p, i in enumerate(order[:-1]):
        head = e[i - 1] + et.scale(c.a(i))
        for combo in itertools.combinations_with_replacement(order[p:], r - 1):
            f = head
            for j in combo:
                f = f * e[j - 1]
            out.append(f)
    assert len(out) == comb(s + r - 1, r) - 1
    return out


def random_candidate(s: int, t: int, seed: int = 0, field=QQ) -> ReductionCandidate:
    """Nonzero coefficients drawn from ``field`` (bounded integers over Q), a_t = -1."""
    if not 1 <= t <= s:
        raise ValueError(f"t={t} outside 1..{s}")
    rng = random.Random(seed)
    coeffs = [field.random_nonzero(rng) for _ in range(s)]
    coeffs[t - 1] = -field.one
    return ReductionCandidate(t, tuple(coeffs), field, f"random(seed={seed})")


@dataclass
class GenericityScan:
    """Empirical tally over random constant candidates (no theorem asserted)."""

    samples: int = 0
    obstructed: int = 0
    unobstructed_reduction: int = 0
    unobstructed_non_reduction: int = 0
    obstructed_reduction: int = 0
    details: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("samples", "obstructed", "unobstructed_reduction",
                                               "unobstructed_non_reduction", "obstructed_reduction")}


def genericity_scan(g: Graph, field=QQ, samples: int = 100, seed: int = 0) -> GenericityScan:
    cls = classify(g)
    I = edge_ideal(g, field)
    r = cls.d // 2 - 1
    rng = random.Random(seed)
    out = GenericityScan()
    for k in range(samples):
        t = rng.randint(1, cls.s)
        c = random_candidate(cls.s, t, seed=rng.getrandbits(32), field=field)
        obs = obstruction_check(c, cls)
        red = is_reduction(c, I, r)
        out.samples += 1
        if obs:
            out.obstructed += 1
            out.obstructed_reduction += red
        elif red:
            out.unobstructed_reduction += 1
        else:
            out.unobstructed_non_reduction += 1
            out.details.append(c)
    return out
