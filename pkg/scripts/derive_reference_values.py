"""Recompute the reference values frozen in the tests from independent oracles.

Each value is printed next to the package's own answer; the tests hold the
oracle numbers as literals.
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import boolean_chain_counts  # noqa: E402

from crossed_coherence.coherent_end import brute_force_count, coh_space  # noqa: E402
from crossed_coherence.nerve import hom_simplices, nerve_set  # noqa: E402
from crossed_coherence.pi import pi  # noqa: E402
from crossed_coherence.scategory import (SFunctor, cube_count_check, two_object_category)  # noqa: E402
from crossed_coherence.simplicial import Simplex, SimplicialMap, identity_map, std_simplex  # noqa: E402


def monotone_grid_maps(rows: int, cols: int) -> list:
    """Order preserving maps [rows-1] x [cols-1] -> {0, 1}, as dicts."""
    cells = list(itertools.product(range(rows), range(cols)))
    out = []
    for values in itertools.product((0, 1), repeat=len(cells)):
        v = dict(zip(cells, values))
        if all(v[a] <= v[b] for a in cells for b in cells if a[0] <= b[0] and a[1] <= b[1]):
            out.append(v)
    return out


def coherent_end_oracle(n: int) -> int:
    """phi0: [n] -> {0,1} monotone, phi1: [1] x [n] -> {0,1}; need phi0(t) <= phi1(0, t)."""
    phi0s = monotone_grid_maps(1, n + 1)
    phi1s = monotone_grid_maps(2, n + 1)
    return sum(1 for a in phi0s for b in phi1s if all(a[(0, t)] <= b[(0, t)] for t in range(n + 1)))


def main():
    for n in range(1, 6):
        print(f"S[{n}](0,{n}) oracle {boolean_chain_counts(n - 1)} package {cube_count_check(n)[2][0]}")
    P1 = pi(std_simplex(1))
    for n in range(3):
        print(f"|CRS(pi1, pi1)_{n}| oracle {4 ** (n + 1)} package {len(hom_simplices(P1, P1, n))}")
    print(f"N(pi1) nondegenerate counts package {nerve_set(P1, 3).counts()} oracle [2, 2, 2, 2]")
    D0, D1 = std_simplex(0), std_simplex(1)
    A = two_object_category()
    F = SFunctor(A, {0: D0, 1: D1}, {"u": SimplicialMap(D0, D1, {(0,): Simplex((0,), 0)})})
    G = SFunctor(A, {0: D1, 1: D1}, {"u": identity_map(D1)})
    for n in (0, 1):
        print(f"coherent end level 1, n={n}: oracle {coherent_end_oracle(n)} "
              f"brute force {brute_force_count(A, F, G, n)} package {len(coh_space(A, F, G, 1, n))}")


if __name__ == "__main__":
    main()
