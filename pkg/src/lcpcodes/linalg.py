"""Exact linear algebra for submodules of R^n over one finite chain ring.

Everything is built on a pivot (echelon) form whose pivot entries are exact
powers gamma^t.  The reduction keeps the form canonical: entries below a
pivot are zero, entries above are reduced to canonical representatives
modulo <gamma^t>, and for every pivot with t > 0 the saturation row
gamma^(e-t) * row is folded back in.  The saturation step is what makes
membership, cardinality and codeword enumeration agree with brute force
over rings with zero divisors; over fields it is a no-op and the form is
the ordinary reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, ValidationError
from .rings import ChainRing

__all__ = [
    "RingMatrix",
    "PivotForm",
    "SpanSolver",
    "pivot_reduce",
    "membership",
    "kernel",
    "cardinality",
    "enumerate_codewords",
    "DEFAULT_ENUM_CAP",
]

DEFAULT_ENUM_CAP = 1 << 20


@dataclass(frozen=True)
class RingMatrix:
    """Rows over one chain ring; ``ncols`` kept explicit for empty matrices."""

    ring: ChainRing
    rows: tuple
    ncols: int

    @classmethod
    def make(cls, ring: ChainRing, rows, ncols: int | None = None) -> "RingMatrix":
        rows = tuple(tuple(ring.check(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValidationError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValidationError("rows of differing length")
        return cls(ring, rows, ncols)

    def pretty(self) -> str:
        return _grid(self.ring, self.rows, self.ncols)


@dataclass(frozen=True)
class PivotForm:
    """Canonical generator rows: pivot j is exactly gamma^{pivot_vals[j]}."""

    ring: ChainRing
    ncols: int
    rows: tuple
    pivot_cols: tuple
    pivot_vals: tuple

    def cardinality(self) -> int:
        q, e = self.ring.q, self.ring.e
        out = 1
        for t in self.pivot_vals:
            out *= q ** (e - t)
        return out

    def contains(self, v) -> bool:
        return membership(v, self)

    def codewords(self, cap: int = DEFAULT_ENUM_CAP):
        return enumerate_codewords(self, cap)

    def key(self):
        return (self.pivot_cols, self.pivot_vals, self.rows)

    def pretty(self) -> str:
        return _grid(self.ring, self.rows, self.ncols)


def _grid(ring, rows, ncols) -> str:
    if not rows:
        return f"(empty, {ncols} columns over {ring!r})"
    cells = [[ring.format_element(x) for x in row] for row in rows]
    widths = [max(len(cells[i][j]) for i in range(len(rows))) for j in range(ncols)]
    return "\n".join(
        "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
        for row in cells
    )


def _vec_submul(ring, row, w, piv, start):
    """row -= w * piv, touching columns >= start (piv is zero before start)."""
    mul, sub = ring.mul, ring.sub
    for k in range(start, len(row)):
        pk = piv[k]
        if pk != ring.zero:
            row[k] = sub(row[k], mul(w, pk))


def _howell(ring, rows, width, pivot_cols_limit):
    """Shared reduction engine.

    Scans columns 0..pivot_cols_limit-1 for pivots while carrying rows of
    ``width`` entries, so the same code serves plain reduction and the
    augmented solver.  Returns (rows, pivot_cols, pivot_vals).
    """
    e = ring.e
    zero = ring.zero
    work = [list(row) for row in rows if any(x != zero for x in row)]
    res_rows, res_cols, res_vals = [], [], []
    for col in range(pivot_cols_limit):
        best, best_v = None, e
        for idx, row in enumerate(work):
            v = ring.valuation(row[col])
            if v < best_v:
                best, best_v = idx, v
                if v == 0:
                    break
        if best is None:
            continue
        piv = work.pop(best)
        t = best_v
        unit = ring.div_gamma(piv[col], t)
        if unit != ring.one:
            ui = ring.inverse(unit)
            piv = [ring.mul(ui, x) for x in piv]
        # clear the column in the remaining rows (their valuation is >= t by
        # pivot minimality) and canonicalize it in the finished rows
        for row in work:
            x = row[col]
            if x != zero:
                _vec_submul(ring, row, ring.div_gamma(x, t), piv, col)
        work = [row for row in work if any(x != zero for x in row)]
        for row in res_rows:
            x = row[col]
            if x == zero:
                continue
            if ring.valuation(x) >= t:
                w = ring.div_gamma(x, t)
            else:
                rem = ring.reduce_mod_gamma(x, t)
                w = ring.div_gamma(ring.sub(x, rem), t)
            _vec_submul(ring, row, w, piv, col)
        res_rows.append(piv)
        res_cols.append(col)
        res_vals.append(t)
        if t > 0:
            g = ring.gamma_power(e - t)
            sat = [ring.mul(g, x) for x in piv]
            if any(x != zero for x in sat):
                work.append(sat)
    return res_rows, res_cols, res_vals


def pivot_reduce(M: RingMatrix) -> PivotForm:
    """Canonical pivot form with the same row span as M."""
    rows, cols, vals = _howell(M.ring, M.rows, M.ncols, M.ncols)
    return PivotForm(
        M.ring,
        M.ncols,
        tuple(tuple(r) for r in rows),
        tuple(cols),
        tuple(vals),
    )


def membership(v, P: PivotForm) -> bool:
    """Whether v lies in the span of the pivot form."""
    ring = P.ring
    if len(v) != P.ncols:
        raise ValidationError(f"vector length {len(v)} != {P.ncols}")
    zero = ring.zero
    v = [ring.check(x) for x in v]
    for row, col, t in zip(P.rows, P.pivot_cols, P.pivot_vals):
        x = v[col]
        if x == zero:
            continue
        if ring.valuation(x) < t:
            return False
        _vec_submul(ring, v, ring.div_gamma(x, t), row, col)
    return all(x == zero for x in v)


def cardinality(P: PivotForm) -> int:
    return P.cardinality()


def enumerate_codewords(P: PivotForm, cap: int = DEFAULT_ENUM_CAP):
    """Yield every span element exactly once, in a fixed lexicographic order.

    The coefficient of row j runs over the canonical transversal of
    <gamma^(e - t_j)>, giving q^(e - t_j) choices; row 0 varies slowest.
    """
    if P.cardinality() > cap:
        raise CapExceededError(
            f"span of size {P.cardinality()} exceeds the enumeration cap {cap}"
        )
    ring = P.ring
    zero_vec = tuple(ring.zero for _ in range(P.ncols))

    def rec(j, acc):
        if j == len(P.rows):
            yield tuple(acc)
            return
        row = P.rows[j]
        for c in ring.transversal(ring.e - P.pivot_vals[j]):
            if c == ring.zero:
                yield from rec(j + 1, acc)
            else:
                nxt = [ring.add(a, ring.mul(c, x)) for a, x in zip(acc, row)]
                yield from rec(j + 1, nxt)

    yield from rec(0, list(zero_vec))


def kernel(M: RingMatrix) -> PivotForm:
    """Pivot form of {x : M x^T = 0}, via diagonalization with a tracked
    column transform; a diagonal gamma^d contributes gamma^(e-d) times the
    matching transformed column."""
    ring, n = M.ring, M.ncols
    e, zero = ring.e, ring.zero
    rows = [list(r) for r in M.rows]
    m = len(rows)
    V = [[ring.one if i == j else zero for j in range(n)] for i in range(n)]
    diag = [e] * n
    for k in range(min(m, n)):
        bt, bi, bj = e, None, None
        for i in range(k, m):
            for j in range(k, n):
                v = ring.valuation(rows[i][j])
                if v < bt:
                    bt, bi, bj = v, i, j
                    if bt == 0:
                        break
            if bt == 0:
                break
        if bi is None:
            break
        if bi != k:
            rows[k], rows[bi] = rows[bi], rows[k]
        if bj != k:
            for row in rows:
                row[k], row[bj] = row[bj], row[k]
            for row in V:
                row[k], row[bj] = row[bj], row[k]
        t = bt
        unit = ring.div_gamma(rows[k][k], t)
        if unit != ring.one:
            ui = ring.inverse(unit)
            rows[k] = [ring.mul(ui, x) for x in rows[k]]
        for i in range(k + 1, m):
            x = rows[i][k]
            if x != zero:
                w = ring.div_gamma(x, t)
                rows[i] = [ring.sub(a, ring.mul(w, b)) for a, b in zip(rows[i], rows[k])]
        for j in range(k + 1, n):
            x = rows[k][j]
            if x != zero:
                w = ring.div_gamma(x, t)
                for row in rows:
                    row[j] = ring.sub(row[j], ring.mul(w, row[k]))
                for row in V:
                    row[j] = ring.sub(row[j], ring.mul(w, row[k]))
        diag[k] = t
    gens = []
    for j in range(n):
        d = diag[j]
        if d == 0:
            continue
        g = ring.gamma_power(e - d)
        gen = tuple(ring.mul(g, V[i][j]) for i in range(n))
        if any(x != zero for x in gen):
            gens.append(gen)
    return pivot_reduce(RingMatrix(ring, tuple(gens), n))


class SpanSolver:
    """Writes vectors as explicit combinations of a fixed list of generators.

    The generator matrix is reduced once with identity bookkeeping columns;
    each ``solve`` is then a single membership-style reduction.
    """

    def __init__(self, M: RingMatrix):
        self.ring = M.ring
        self.ncols = M.ncols
        self.nrows = len(M.rows)
        zero, one = M.ring.zero, M.ring.one
        aug = [
            tuple(row) + tuple(one if i == j else zero for j in range(self.nrows))
            for i, row in enumerate(M.rows)
        ]
        rows, cols, vals = _howell(M.ring, aug, M.ncols + self.nrows, M.ncols)
        self._rows = [tuple(r) for r in rows]
        self._cols = cols
        self._vals = vals

    def solve(self, target):
        """Coefficients c with sum_i c_i * row_i = target, or None."""
        ring = self.ring
        if len(target) != self.ncols:
            raise ValidationError("target length mismatch")
        zero = ring.zero
        v = list(target) + [zero] * self.nrows
        for row, col, t in zip(self._rows, self._cols, self._vals):
            x = v[col]
            if x == zero:
                continue
            if ring.valuation(x) < t:
                return None
            _vec_submul(ring, v, ring.div_gamma(x, t), row, col)
        if any(x != zero for x in v[: self.ncols]):
            return None
        return tuple(ring.neg(x) for x in v[self.ncols :])
