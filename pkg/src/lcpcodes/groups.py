"""Finite groups stored extensionally as validated Cayley tables.

Index 0 is always the identity; ``table[i][j]`` is the index of g_i * g_j and
``inv[i]`` the index of the inverse of g_i.  Tables are validated on
construction: identity, Latin-square property, associativity (exhaustively for
order <= 64) and two-sided inverses, each with its own error type.
"""

from __future__ import annotations

import itertools

from .errors import ValidationError

__all__ = [
    "FiniteGroup",
    "group_from_table",
    "cyclic",
    "dihedral",
    "symmetric",
    "direct_product",
    "parse_cayley_table",
    "load_cayley_table",
    "IdentityError",
    "LatinSquareError",
    "AssociativityError",
    "InverseError",
]

ASSOC_SCAN_LIMIT = 64


class IdentityError(ValidationError):
    """The table has no two-sided identity element."""


class LatinSquareError(ValidationError):
    """Some row or column of the table is not a permutation."""


class AssociativityError(ValidationError):
    """The table describes a quasigroup, not a group."""


class InverseError(ValidationError):
    """Some element lacks a two-sided inverse."""


class FiniteGroup:
    """A finite group of order n with identity normalized to index 0.

    Identity, Latin-square and inverse checks always run; the cubic
    associativity scan runs for orders up to ASSOC_SCAN_LIMIT (the named
    constructors build their tables from closed-form presentations, so
    larger orders are safe by construction).
    """

    def __init__(self, table, labels=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise ValidationError("empty Cayley table")
        for row in table:
            if len(row) != n:
                raise LatinSquareError("Cayley table is not square")
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise LatinSquareError(f"table entry {x!r} outside 0..{n - 1}")
        self.n = n
        self.table = table
        self.labels = self._default_labels(n) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise ValidationError("label count does not match group order")
        self._validate()
        self.inv = self._build_inverses()

    @staticmethod
    def _default_labels(n):
        return ("e",) + tuple(f"g{i}" for i in range(1, n))

    def _validate(self):
        n, t = self.n, self.table
        if any(t[0][j] != j for j in range(n)) or any(t[i][0] != i for i in range(n)):
            raise IdentityError("index 0 is not a two-sided identity")
        full = set(range(n))
        for i in range(n):
            if set(t[i]) != full:
                raise LatinSquareError(f"row {i} is not a permutation")
        for j in range(n):
            if {t[i][j] for i in range(n)} != full:
                raise LatinSquareError(f"column {j} is not a permutation")
        if n <= ASSOC_SCAN_LIMIT:
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab, tb = t[ta[b]], t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise AssociativityError(
                                f"({a}*{b})*{c} != {a}*({b}*{c})"
                            )

    def _build_inverses(self):
        n, t = self.n, self.table
        inv = [0] * n
        for i in range(n):
            j = t[i].index(0)
            if t[j][i] != 0:
                raise InverseError(f"element {i} has no two-sided inverse")
            inv[i] = j
        return tuple(inv)

    # -- queries ---------------------------------------------------------------

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.n) for j in range(i))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.n})"


def group_from_table(table, labels=None) -> FiniteGroup:
    """Validate a raw Cayley table, relabeling so the identity sits at index 0."""
    table = [list(row) for row in table]
    n = len(table)
    if n == 0:
        raise ValidationError("empty Cayley table")
    for row in table:
        if len(row) != n:
            raise LatinSquareError("Cayley table is not square")
        for x in row:
            if not isinstance(x, int) or not 0 <= x < n:
                raise LatinSquareError(f"table entry {x!r} outside 0..{n - 1}")
    ident = None
    for i in range(n):
        if all(table[i][j] == j for j in range(n)) and all(table[k][i] == k for k in range(n)):
            ident = i
            break
    if ident is None:
        raise IdentityError("no two-sided identity element found")
    if ident != 0:
        # swap labels 0 <-> ident
        sig = list(range(n))
        sig[0], sig[ident] = ident, 0
        table = [[sig[table[sig[a]][sig[b]]] for b in range(n)] for a in range(n)]
        if labels is not None:
            labels = list(labels)
            labels[0], labels[ident] = labels[ident], labels[0]
    return FiniteGroup(table, labels=labels)


# ---------------------------------------------------------------------------
# named constructors (element orders are fixed so coordinates are reproducible)


def cyclic(n: int) -> FiniteGroup:
    """C_n with elements e, g, g^2, ..., g^{n-1}."""
    if n < 1:
        raise ValidationError("cyclic group order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, labels=labels)


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n: rotations r^0..r^{n-1} first, then reflections r^i*s.

    Composition follows s*r*s^-1 = r^-1:
    r^a * r^b = r^(a+b), r^a * (r^b s) = r^(a+b) s, (r^a s) * r^b = r^(a-b) s,
    and (r^a s)(r^b s) = r^(a-b).
    """
    if n < 1:
        raise ValidationError("dihedral parameter must be >= 1")
    order = 2 * n
    table = [[0] * order for _ in range(order)]
    for a in range(n):
        for b in range(n):
            table[a][b] = (a + b) % n
            table[a][n + b] = n + (a + b) % n
            table[n + a][b] = n + (a - b) % n
            table[n + a][n + b] = (a - b) % n
    rot = ["e"] + [f"r^{i}" if i > 1 else "r" for i in range(1, n)]
    ref = ["s"] + [f"{r}s" for r in rot[1:]]
    return FiniteGroup(table, labels=rot + ref)


def symmetric(m: int) -> FiniteGroup:
    """S_m with elements in lexicographic one-line order; (s*t)(x) = s(t(x))."""
    if m < 1:
        raise ValidationError("symmetric group parameter must be >= 1")
    if m > 5:
        raise ValidationError("symmetric groups supported up to S_5 (order 120)")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(s[t[x]] for x in range(m))] for t in perms]
        for s in perms
    ]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels=labels)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with elements ordered as lexicographic pairs (a, b) -> a*|H| + b."""
    order = G.n * H.n
    if order > 256:
        raise ValidationError(f"direct product order {order} exceeds the 256 limit")
    nh = H.n
    table = [
        [G.table[a][c] * nh + H.table[b][d] for c in range(G.n) for d in range(nh)]
        for a in range(G.n)
        for b in range(nh)
    ]
    labels = [f"({la},{lb})" for la in G.labels for lb in H.labels]
    return FiniteGroup(table, labels=labels)


# ---------------------------------------------------------------------------
# Cayley-table file format: first line n, then n lines of n 0-based indices


def parse_cayley_table(text: str) -> FiniteGroup:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValidationError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValidationError(f"bad order line {lines[0]!r}") from exc
    if len(lines) != n + 1:
        raise ValidationError(f"expected {n} table rows, found {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ValidationError(f"bad table row {ln!r}") from exc
        if len(row) != n:
            raise ValidationError(f"row {ln!r} does not have {n} entries")
        table.append(row)
    return group_from_table(table)


def load_cayley_table(path) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cayley_table(fh.read())
