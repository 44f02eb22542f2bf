"""Group codes: two-sided ideals of R[G] viewed as codes in R^n.

All product-ring computation is componentwise-first: a code is stored as one
pivot form per CRT component, operations act per component, and the Chinese
product reassembles results.  Duality uses the standard coordinatewise
bilinear form on the coefficient vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .algebra import GroupAlgebra
from .errors import CapExceededError, NotLcpError, ValidationError
from .linalg import (
    DEFAULT_ENUM_CAP,
    RingMatrix,
    SpanSolver,
    kernel,
    membership,
    pivot_reduce,
)
from .rings import ProductRing

__all__ = [
    "GroupCode",
    "LcpReport",
    "DsmSplitter",
    "code_from_generators",
    "code_sum",
    "code_intersect",
    "code_dual",
    "code_cardinality",
    "code_crt_project",
    "code_crt_combine",
    "lcp_check",
    "min_distance",
    "weight_enumerator",
    "security_parameter",
    "dsm_split",
    "enumerate_ideals",
    "DEFAULT_IDEAL_CAP",
]

DEFAULT_IDEAL_CAP = 1 << 12


class GroupCode:
    """A two-sided ideal of R[G], held as per-component pivot forms."""

    def __init__(self, algebra: GroupAlgebra, generators, components):
        self.algebra = algebra
        self.generators = tuple(generators)
        self.components = tuple(components)
        self._key = None
        self._weights = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_generators(cls, algebra: GroupAlgebra, generators) -> "GroupCode":
        """Smallest two-sided ideal containing the generators.

        Per component the rows g * a * h for all group elements g, h already
        span an ideal closed under multiplication from both sides, so a single
        reduction suffices.
        """
        gens = tuple(algebra.check(a) for a in generators)
        group = algebra.group
        n, t, inv = group.n, group.table, group.inv
        forms = []
        for j, cr in enumerate(algebra.ring.components):
            rows = []
            for a in gens:
                aj = tuple(a[i][j] for i in range(n))
                for g in range(n):
                    tg = t[inv[g]]
                    for h in range(n):
                        ih = inv[h]
                        rows.append(tuple(aj[tg[t[m][ih]]] for m in range(n)))
            rows = tuple(dict.fromkeys(rows))
            forms.append(pivot_reduce(RingMatrix(cr, rows, n)))
        return cls(algebra, gens, forms)

    @classmethod
    def from_components(cls, algebra: GroupAlgebra, forms) -> "GroupCode":
        """Chinese product of per-component spans (assumed to be ideals).

        Generators are the component pivot rows embedded with zeros in the
        other components.
        """
        forms = tuple(forms)
        ring = algebra.ring
        n = algebra.group.n
        if len(forms) != ring.s:
            raise ValidationError(f"need {ring.s} component forms, got {len(forms)}")
        for form, cr in zip(forms, ring.components):
            if form.ring != cr or form.ncols != n:
                raise ValidationError("component form does not match the algebra")
        gens = []
        for j, form in enumerate(forms):
            for row in form.rows:
                gens.append(
                    tuple(
                        tuple(
                            row[i] if k == j else ring.components[k].zero
                            for k in range(ring.s)
                        )
                        for i in range(n)
                    )
                )
        return cls(algebra, gens, forms)

    # -- basic queries ---------------------------------------------------------

    def cardinality(self) -> int:
        return prod(P.cardinality() for P in self.components)

    @property
    def is_zero(self) -> bool:
        return self.cardinality() == 1

    @property
    def is_full(self) -> bool:
        return self.cardinality() == self.algebra.size

    def contains(self, a) -> bool:
        a = self.algebra.check(a)
        n = self.algebra.group.n
        for j, P in enumerate(self.components):
            if not membership(tuple(a[i][j] for i in range(n)), P):
                return False
        return True

    def codewords(self, cap: int = DEFAULT_ENUM_CAP):
        """All codewords as algebra elements (product of component streams)."""
        if self.cardinality() > cap:
            raise CapExceededError(
                f"code of size {self.cardinality()} exceeds the enumeration cap {cap}"
            )
        n = self.algebra.group.n
        streams = [list(P.codewords(cap)) for P in self.components]
        for combo in itertools.product(*streams):
            yield tuple(tuple(part[i] for part in combo) for i in range(n))

    @property
    def key(self):
        """Canonical identity of the code: all component pivot forms."""
        if self._key is None:
            self._key = tuple(P.key() for P in self.components)
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, GroupCode)
            and self.algebra == other.algebra
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.algebra, self.key))

    def __repr__(self):
        return f"GroupCode(|C| = {self.cardinality()})"

    def is_two_sided(self) -> bool:
        """Closure of every component span under left/right basis translation."""
        group = self.algebra.group
        n, t, inv = group.n, group.table, group.inv
        for P in self.components:
            for row in P.rows:
                for g in range(1, n):
                    ig = inv[g]
                    left = tuple(row[t[ig][m]] for m in range(n))
                    right = tuple(row[t[m][ig]] for m in range(n))
                    if not membership(left, P) or not membership(right, P):
                        return False
        return True

    def crt_project(self) -> tuple["GroupCode", ...]:
        """The component codes, each over its own chain-ring algebra."""
        comps = self.algebra.components
        return tuple(
            GroupCode.from_components(comps[j], (self.components[j],))
            for j in range(len(self.components))
        )


def code_from_generators(algebra: GroupAlgebra, generators) -> GroupCode:
    return GroupCode.from_generators(algebra, generators)


def _same_algebra(C: GroupCode, D: GroupCode):
    if C.algebra != D.algebra:
        raise ValidationError("codes live in different group algebras")


def code_sum(C: GroupCode, D: GroupCode) -> GroupCode:
    _same_algebra(C, D)
    n = C.algebra.group.n
    forms = [
        pivot_reduce(RingMatrix(P.ring, P.rows + Q.rows, n))
        for P, Q in zip(C.components, D.components)
    ]
    return GroupCode.from_components(C.algebra, forms)


def code_dual(C: GroupCode) -> GroupCode:
    """Annihilator under the coordinatewise bilinear form, per component."""
    n = C.algebra.group.n
    forms = [kernel(RingMatrix(P.ring, P.rows, n)) for P in C.components]
    out = GroupCode.from_components(C.algebra, forms)
    assert out.is_two_sided(), "dual of an ideal must remain an ideal"
    return out


def code_intersect(C: GroupCode, D: GroupCode) -> GroupCode:
    """Componentwise (C_j^perp + D_j^perp)^perp, reusing the kernel engine."""
    _same_algebra(C, D)
    n = C.algebra.group.n
    forms = []
    for P, Q in zip(C.components, D.components):
        kc = kernel(RingMatrix(P.ring, P.rows, n))
        kd = kernel(RingMatrix(Q.ring, Q.rows, n))
        inter = kernel(RingMatrix(P.ring, kc.rows + kd.rows, n))
        if __debug__:
            for row in inter.rows:
                assert membership(row, P) and membership(row, Q)
        forms.append(inter)
    return GroupCode.from_components(C.algebra, forms)


def code_cardinality(C: GroupCode) -> int:
    return C.cardinality()


def code_crt_project(C: GroupCode) -> tuple:
    return C.crt_project()


def code_crt_combine(parts, algebra: GroupAlgebra | None = None) -> GroupCode:
    """Chinese product of chain-ring codes over a common group."""
    parts = tuple(parts)
    if not parts:
        raise ValidationError("need at least one component code")
    group = parts[0].algebra.group
    comps = []
    for part in parts:
        if part.algebra.group != group:
            raise ValidationError("component codes use different groups")
        if part.algebra.ring.s != 1:
            raise ValidationError("component codes must be chain-ring codes")
        comps.append(part.algebra.ring.components[0])
    if algebra is None:
        algebra = GroupAlgebra(ProductRing(comps), group)
    else:
        if tuple(algebra.ring.components) != tuple(comps) or algebra.group != group:
            raise ValidationError("target algebra does not match the component codes")
    return GroupCode.from_components(algebra, [p.components[0] for p in parts])


# ---------------------------------------------------------------------------
# LCP, distances, security parameter


@dataclass(frozen=True)
class LcpReport:
    is_lcp: bool
    intersection_size: int
    sum_is_full: bool
    component_verdicts: tuple
    security_parameter: int | None


def lcp_check(
    C: GroupCode,
    D: GroupCode,
    max_enum: int = DEFAULT_ENUM_CAP,
    fill_security: bool = True,
) -> LcpReport:
    """Decide whether (C, D) is a linear complementary pair.

    Runs both the direct test (trivial intersection and full sum) and the
    componentwise test, which must agree; when the pair is LCP the security
    parameter min{d(C), d(D^perp)} is attached.
    """
    _same_algebra(C, D)
    inter = code_intersect(C, D)
    total = code_sum(C, D)
    isize = inter.cardinality()
    sum_full = total.cardinality() == C.algebra.size
    n = C.algebra.group.n
    verdicts = tuple(
        ip.cardinality() == 1 and P.cardinality() * Q.cardinality() == cr.size**n
        for ip, P, Q, cr in zip(
            inter.components, C.components, D.components, C.algebra.ring.components
        )
    )
    direct = isize == 1 and sum_full
    if direct != all(verdicts):
        raise AssertionError("direct and componentwise LCP verdicts disagree")
    sec = None
    if direct and fill_security:
        sec = security_parameter(C, D, max_enum=max_enum, _assume_lcp=True)
    return LcpReport(
        is_lcp=direct,
        intersection_size=isize,
        sum_is_full=sum_full,
        component_verdicts=verdicts,
        security_parameter=sec,
    )


def _weight_distribution(C: GroupCode, max_enum: int):
    if C._weights is None:
        card = C.cardinality()
        if card > max_enum:
            raise CapExceededError(
                f"code of size {card} exceeds the enumeration cap {max_enum}"
            )
        n = C.algebra.group.n
        zeros = [cr.zero for cr in C.algebra.ring.components]
        counts = [0] * (n + 1)
        streams = [list(P.codewords(max_enum)) for P in C.components]
        for combo in itertools.product(*streams):
            w = sum(
                1
                for i in range(n)
                if any(part[i] != z for part, z in zip(combo, zeros))
            )
            counts[w] += 1
        C._weights = tuple(counts)
    return C._weights


def min_distance(C: GroupCode, max_enum: int = DEFAULT_ENUM_CAP) -> int:
    """Minimum Hamming weight of a nonzero codeword; n + 1 for the zero code."""
    n = C.algebra.group.n
    wd = _weight_distribution(C, max_enum)
    for w in range(1, n + 1):
        if wd[w]:
            return w
    return n + 1


def weight_enumerator(C: GroupCode, max_enum: int = DEFAULT_ENUM_CAP) -> tuple:
    """Codeword counts by Hamming weight 0..n."""
    return _weight_distribution(C, max_enum)


def security_parameter(
    C: GroupCode,
    D: GroupCode,
    max_enum: int = DEFAULT_ENUM_CAP,
    _assume_lcp: bool = False,
) -> int:
    """min{d(C), d(D^perp)} for an LCP pair; the two are checked to be equal."""
    if not _assume_lcp:
        rep = lcp_check(C, D, fill_security=False)
        if not rep.is_lcp:
            raise NotLcpError("security parameter is only defined for LCP pairs")
    dc = min_distance(C, max_enum)
    dd = min_distance(code_dual(D), max_enum)
    if dc != dd:
        raise AssertionError(
            f"LCP pair with d(C) = {dc} but d(D^perp) = {dd}; these must be equal"
        )
    return min(dc, dd)


# ---------------------------------------------------------------------------
# direct sum masking


class DsmSplitter:
    """Decomposes R[G] along a fixed complementary pair C + D.

    The stacked generator systems are pre-reduced once per component, so each
    ``split`` is a single linear solve.
    """

    def __init__(self, C: GroupCode, D: GroupCode, check: bool = True):
        if check:
            rep = lcp_check(C, D, fill_security=False)
            if not rep.is_lcp:
                raise NotLcpError("direct sum masking needs an LCP pair")
        self.C, self.D = C, D
        n = C.algebra.group.n
        self._solvers = []
        self._c_row_counts = []
        for P, Q in zip(C.components, D.components):
            rows = P.rows + Q.rows
            self._solvers.append(SpanSolver(RingMatrix(P.ring, rows, n)))
            self._c_row_counts.append(len(P.rows))

    def split(self, z):
        """The unique (c, d) with z = c + d, c in C, d in D."""
        A = self.C.algebra
        z = A.check(z)
        n = A.group.n
        c_parts = []
        for j, (solver, nc) in enumerate(zip(self._solvers, self._c_row_counts)):
            cr = A.ring.components[j]
            zj = tuple(z[i][j] for i in range(n))
            coeffs = solver.solve(zj)
            if coeffs is None:
                raise AssertionError("LCP pair failed to span the algebra")
            cj = [cr.zero] * n
            rows = self.C.components[j].rows
            for coef, row in zip(coeffs[:nc], rows):
                if coef != cr.zero:
                    for i in range(n):
                        cj[i] = cr.add(cj[i], cr.mul(coef, row[i]))
            c_parts.append(cj)
        c = tuple(tuple(c_parts[j][i] for j in range(A.ring.s)) for i in range(n))
        d = A.sub(z, c)
        assert self.C.contains(c) and self.D.contains(d)
        return c, d


def dsm_split(z, C: GroupCode, D: GroupCode):
    return DsmSplitter(C, D).split(z)


# ---------------------------------------------------------------------------
# exhaustive ideal enumeration (desk scale)


def enumerate_ideals(algebra: GroupAlgebra, max_size: int = DEFAULT_IDEAL_CAP):
    """All two-sided ideals of R[G]: principal ideals closed under sums.

    Deterministic output, sorted by cardinality then canonical key.
    """
    if algebra.size > max_size:
        raise CapExceededError(
            f"|R[G]| = {algebra.size} exceeds the ideal-enumeration cap {max_size}"
        )
    seen = {}
    for a in algebra.elements():
        code = GroupCode.from_generators(algebra, (a,))
        seen.setdefault(code.key, code)
    changed = True
    while changed:
        changed = False
        current = list(seen.values())
        for X in current:
            for Y in current:
                S = code_sum(X, Y)
                if S.key not in seen:
                    seen[S.key] = S
                    changed = True
    return sorted(seen.values(), key=lambda c: (c.cardinality(), c.key))
