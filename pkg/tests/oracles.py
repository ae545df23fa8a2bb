"""Independent brute-force oracles used to cross-check the library.

Deliberately naive and kept separate from the package: no bitmasks, no
level-by-level enumeration, its own GF(p) rank.  Tests compare library
output against these.
"""
from itertools import chain, combinations

from matadj.sets import ElementSet


def powerset(iterable):
    s = list(iterable)
    return chain.from_iterable(combinations(s, k) for k in range(len(s) + 1))


def brute_rank(M, subset):
    """Rank via exhaustive independent-subset enumeration over the bases."""
    best = 0
    for b in M.bases:
        best = max(best, len(set(subset) & b))
    return best


def brute_flats(M):
    """Close every one of the 2^n subsets and deduplicate."""
    seen = set()
    for sub in powerset(range(M.n)):
        seen.add(M.closure(ElementSet.of(sub, M.n)))
    return seen


def gf_matrix_rank(rows, p):
    """Row-reduction rank over GF(p), written independently of matadj.linalg."""
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][c] % p != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], p - 2, p) if p > 2 else mat[rank][c]
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c] % p != 0:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def greedy_rank(M, subset):
    """Second independent rank oracle: grow an independent set greedily.

    Uses only basis membership questions, via the fact that a set is
    independent iff it is contained in some basis.
    """
    picked = set()
    for e in sorted(subset):
        cand = picked | {e}
        if any(cand <= b for b in M.bases):
            picked = cand
    return len(picked)
