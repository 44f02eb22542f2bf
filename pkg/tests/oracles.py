"""Brute-force reference implementations used to pin expected test values.

Everything here enumerates: spans by trying every coefficient combination,
kernels by scanning the whole ambient module, ideals by closing sets under
the defining operations, products by the forward convolution formula.  None
of it shares code paths with the library's pivot/kernel machinery.
"""

import itertools


def vec_add(ring, u, v):
    return tuple(ring.add(a, b) for a, b in zip(u, v))


def vec_scale(ring, c, v):
    return tuple(ring.mul(c, x) for x in v)


def zero_vec(ring, n):
    return (ring.zero,) * n


def brute_span(ring, rows, n):
    """Every linear combination of the rows, as a set of tuples."""
    span = {zero_vec(ring, n)}
    for row in rows:
        span = {
            vec_add(ring, s, vec_scale(ring, c, row))
            for s in span
            for c in ring.elements()
        }
    return span


def brute_kernel(ring, rows, n):
    """All vectors orthogonal to every row, by scanning the whole module."""
    out = set()
    zero = ring.zero
    for v in itertools.product(ring.elements(), repeat=n):
        ok = True
        for row in rows:
            acc = zero
            for a, b in zip(row, v):
                acc = ring.add(acc, ring.mul(a, b))
            if acc != zero:
                ok = False
                break
        if ok:
            out.add(v)
    return out


def naive_product(ring, group, a, b):
    """Forward convolution: coefficient at g_i*g_j collects a_i * b_j."""
    n = group.n
    out = [ring.zero] * n
    for i in range(n):
        ai = a[i]
        if ai == ring.zero:
            continue
        for j in range(n):
            k = group.op(i, j)
            out[k] = ring.add(out[k], ring.mul(ai, b[j]))
    return tuple(out)


def basis_element(ring, n, i):
    return tuple(ring.one if k == i else ring.zero for k in range(n))


def brute_ideal(algebra, gens):
    """Two-sided ideal as a set: span of all g * a * h translates."""
    ring, group = algebra.ring, algebra.group
    n = group.n
    translates = []
    for a in gens:
        for g in range(n):
            ga = naive_product(ring, group, basis_element(ring, n, g), a)
            for h in range(n):
                translates.append(
                    naive_product(ring, group, ga, basis_element(ring, n, h))
                )
    span = {zero_vec(ring, n)}
    for t in translates:
        span = {
            vec_add(ring, s, vec_scale(ring, c, t))
            for s in span
            for c in ring.elements()
        }
    return span


def is_ideal_subset(algebra, subset):
    """Whether a set of elements is a two-sided ideal (closure checks only)."""
    ring, group = algebra.ring, algebra.group
    n = group.n
    if zero_vec(ring, n) not in subset:
        return False
    for a in subset:
        for b in subset:
            if vec_add(ring, a, b) not in subset:
                return False
        for c in ring.elements():
            if vec_scale(ring, c, a) not in subset:
                return False
        for g in range(n):
            e_g = basis_element(ring, n, g)
            if naive_product(ring, group, e_g, a) not in subset:
                return False
            if naive_product(ring, group, a, e_g) not in subset:
                return False
    return True


def all_ideal_subsets(algebra):
    """Every subset of R[G] that is an ideal; only viable for tiny algebras."""
    elems = [e for e in algebra.elements()]
    zero = zero_vec(algebra.ring, algebra.group.n)
    rest = [e for e in elems if e != zero]
    found = []
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            subset = frozenset(combo) | {zero}
            if is_ideal_subset(algebra, subset):
                found.append(subset)
    return found


def brute_dual(algebra, words):
    """All elements orthogonal to every word under the coordinatewise form."""
    ring = algebra.ring
    zero = ring.zero
    out = set()
    for x in algebra.elements():
        ok = True
        for w in words:
            acc = zero
            for a, b in zip(x, w):
                acc = ring.add(acc, ring.mul(a, b))
            if acc != zero:
                ok = False
                break
        if ok:
            out.add(x)
    return out


def code_word_set(code, cap=1 << 20):
    return set(code.codewords(cap))
