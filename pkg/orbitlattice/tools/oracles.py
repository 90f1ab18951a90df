"""Independent checks that do not go through the combinatorial formulas."""

import logging

import sympy

from orbitlattice.combinatorics.involutions import Involution

logger = logging.getLogger(__name__)


def centralizer_dim_oracle(sigma: Involution) -> int:
    """dim B.N_sigma as dim(b) minus the dimension of the centralizer of N_sigma in b.

    The centralizer is the kernel of X -> X N - N X on upper-triangular X,
    so the orbit dimension is the rank of that map. The rank is computed
    exactly by sympy over the rationals.
    """
    n = sigma.n
    partner = sigma.as_map()
    # N[c][d] = 1 iff c < d and sigma(c) = d.
    ones = {(a, b) for a, b in sigma.cycles}
    basis = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]

    columns = []
    for a, b in basis:
        image = [[0] * n for _ in range(n)]
        # E_ab N has row a equal to row b of N.
        if (b, partner[b]) in ones:
            image[a - 1][partner[b] - 1] += 1
        # N E_ab has column b equal to column a of N.
        if (partner[a], a) in ones:
            image[partner[a] - 1][b - 1] -= 1
        columns.append([v for row in image for v in row])

    rank = sympy.Matrix(columns).T.rank()
    logger.debug("centralizer oracle %s: dim(b)=%d, rank=%d", sigma, len(basis), rank)
    return int(rank)
