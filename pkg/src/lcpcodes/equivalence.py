"""Permutation equivalence of codes: verification and backtracking search.

A permutation p acts on coordinates by w[p[i]] = v[i].  The search first
compares weight enumerators, then partitions coordinates by their column
frequency signatures, and finally backtracks over signature-respecting
assignments in increasing order, so a found permutation is always the
lexicographically least valid one.  For an LCP pair (C, D) the dual-distance
report compares d(C) with d(D^perp) and looks for both per-component and
whole-ring permutations carrying D^perp onto C.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .codes import GroupCode, code_dual, lcp_check, min_distance
from .errors import CapExceededError, NotLcpError, ValidationError
from .linalg import DEFAULT_ENUM_CAP, membership

__all__ = [
    "EquivalenceResult",
    "STATUS_FOUND",
    "STATUS_NOT_EQUIVALENT",
    "STATUS_EXHAUSTED",
    "identity_permutation",
    "apply_permutation",
    "verify_permutation",
    "find_permutation",
    "check_dual_equivalence",
]

STATUS_FOUND = "found"
STATUS_NOT_EQUIVALENT = "not-equivalent"
STATUS_EXHAUSTED = "search-exhausted"

SEARCH_LENGTH_LIMIT = 16


@dataclass(frozen=True)
class EquivalenceResult:
    status: str
    permutation: tuple | None
    d_c: int | None
    d_d_dual: int | None
    block_note: str


def identity_permutation(n: int) -> tuple:
    return tuple(range(n))


def apply_permutation(perm, v):
    out = [None] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


def _check_permutation(perm, n):
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValidationError(f"{perm!r} is not a permutation of 0..{n - 1}")


def verify_permutation(C1: GroupCode, C2: GroupCode, perm) -> bool:
    """Whether permuting the coordinates of C1 yields exactly C2.

    Checked on the component pivot rows plus a cardinality comparison: the
    permuted generators landing inside C2 with equal sizes forces equality.
    """
    if C1.algebra != C2.algebra:
        raise ValidationError("codes live in different group algebras")
    n = C1.algebra.group.n
    _check_permutation(perm, n)
    if C1.cardinality() != C2.cardinality():
        return False
    for P, Q in zip(C1.components, C2.components):
        for row in P.rows:
            if not membership(apply_permutation(perm, row), Q):
                return False
    return True


def _column_signature(words, c):
    return tuple(sorted(Counter(w[c] for w in words).items()))


def _search_lex_least(words1, words2, n):
    """Lexicographically least coordinate permutation mapping set1 to set2."""
    if len(words1) != len(words2):
        return None
    sig1 = [_column_signature(words1, c) for c in range(n)]
    sig2 = [_column_signature(words2, c) for c in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[c2 for c2 in range(n) if sig2[c2] == sig1[c]] for c in range(n)]
    proj1 = [Counter(w[: k + 1] for w in words1) for k in range(n)]
    set2 = set(words2)
    perm = [0] * n
    used = [False] * n

    def partial_ok(k):
        cols = perm[: k + 1]
        return Counter(tuple(w[c] for c in cols) for w in words2) == proj1[k]

    def dfs(k):
        if k == n:
            return all(apply_permutation(perm, w) in set2 for w in words1)
        for c2 in candidates[k]:
            if used[c2]:
                continue
            perm[k] = c2
            used[c2] = True
            if partial_ok(k) and dfs(k + 1):
                return True
            used[c2] = False
        return False

    if dfs(0):
        return tuple(perm)
    return None


def find_permutation(
    C1: GroupCode, C2: GroupCode, max_enum: int = DEFAULT_ENUM_CAP
) -> EquivalenceResult:
    """Search for a coordinate permutation with C2 = C1 * P."""
    if C1.algebra != C2.algebra:
        raise ValidationError("codes live in different group algebras")
    n = C1.algebra.group.n
    if n > SEARCH_LENGTH_LIMIT:
        raise ValidationError(f"permutation search supports n <= {SEARCH_LENGTH_LIMIT}")
    try:
        words1 = list(C1.codewords(max_enum))
        words2 = list(C2.codewords(max_enum))
    except CapExceededError as exc:
        return EquivalenceResult(
            STATUS_EXHAUSTED, None, None, None, f"enumeration cap hit: {exc}"
        )
    zero = C1.algebra.ring.zero
    weights1 = sorted(sum(1 for x in w if x != zero) for w in words1)
    weights2 = sorted(sum(1 for x in w if x != zero) for w in words2)
    d1 = next((w for w in weights1 if w), n + 1)
    d2 = next((w for w in weights2 if w), n + 1)
    if weights1 != weights2:
        return EquivalenceResult(
            STATUS_NOT_EQUIVALENT, None, d1, d2, "weight enumerators differ"
        )
    perm = _search_lex_least(words1, words2, n)
    if perm is None:
        return EquivalenceResult(
            STATUS_NOT_EQUIVALENT, None, d1, d2, "backtracking exhausted all assignments"
        )
    assert verify_permutation(C1, C2, perm)
    return EquivalenceResult(STATUS_FOUND, perm, d1, d2, "")


def check_dual_equivalence(
    C: GroupCode, D: GroupCode, max_enum: int = DEFAULT_ENUM_CAP
) -> EquivalenceResult:
    """For an LCP pair: compare d(C) with d(D^perp) and search permutations.

    Permutations are searched per CRT component and once over the whole
    product ring; the block note records both outcomes, since component
    permutations need not assemble into a single common one.
    """
    rep = lcp_check(C, D, fill_security=False)
    if not rep.is_lcp:
        raise NotLcpError("dual-equivalence comparison needs an LCP pair")
    Dd = code_dual(D)
    d_c = min_distance(C, max_enum)
    d_dd = min_distance(Dd, max_enum)
    notes = []
    for j, (Cj, Ddj) in enumerate(zip(C.crt_project(), Dd.crt_project())):
        res = find_permutation(Ddj, Cj, max_enum)
        if res.status == STATUS_FOUND:
            notes.append(f"component {j}: found {list(res.permutation)}")
        else:
            notes.append(f"component {j}: {res.status}")
    full = find_permutation(Dd, C, max_enum)
    if full.status == STATUS_FOUND:
        notes.append(f"common permutation: found {list(full.permutation)}")
    else:
        notes.append(f"common permutation: {full.status}")
    return EquivalenceResult(
        status=full.status,
        permutation=full.permutation,
        d_c=d_c,
        d_d_dual=d_dd,
        block_note="; ".join(notes),
    )
