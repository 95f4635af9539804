"""Independent reference computations used to freeze expected values."""

import itertools


def boolean_chain_counts(m: int) -> list:
    """Strict chains of length k + 1 in the Boolean lattice {0,1}^m, for k = 0..m."""
    verts = list(itertools.product((0, 1), repeat=m))

    def less(u, v):
        return u != v and all(a <= b for a, b in zip(u, v))

    out = []
    for k in range(m + 1):
        out.append(sum(1 for c in itertools.permutations(verts, k + 1)
                       if all(less(c[i], c[i + 1]) for i in range(k))))
    return out
