"""Involutions of S_n written as products of disjoint transpositions.

An involution sigma is stored in its canonical writing
(i_1,j_1)...(i_k,j_k) with i_s < j_s and i_1 < i_2 < ... < i_k.
L(sigma) = k is the number of transpositions; it is also the rank of N_sigma.
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from orbitlattice.combinatorics.tableaux import (
    TwoColumnTableau,
    _check_two_column_params,
    tableau_from_columns,
)
from orbitlattice.errors import (
    DomainError,
    NotASigmaImageError,
    ParseError,
    TableauValidationError,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]

_CYCLE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class Involution:
    n: int
    cycles: Tuple[Pair, ...] = ()

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise DomainError(f"n must be positive, got {n}")
        cycles = []
        for pair in self.cycles:
            a, b = (int(v) for v in pair)
            if a == b:
                raise DomainError(f"({a},{b}) is not a transposition")
            cycles.append((min(a, b), max(a, b)))
        cycles.sort()
        seen = set()
        for a, b in cycles:
            for v in (a, b):
                if not 1 <= v <= n:
                    raise DomainError(f"entry {v} outside 1..{n}")
                if v in seen:
                    raise DomainError(f"entry {v} appears in two transpositions")
                seen.add(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cycles", tuple(cycles))

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(n, ())

    @property
    def k(self) -> int:
        """L(sigma)."""
        return len(self.cycles)

    @property
    def firsts(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.cycles)

    @property
    def seconds(self) -> Tuple[int, ...]:
        return tuple(j for _, j in self.cycles)

    def as_map(self) -> Dict[int, int]:
        mapping = {v: v for v in range(1, self.n + 1)}
        for a, b in self.cycles:
            mapping[a], mapping[b] = b, a
        return mapping

    def __call__(self, value: int) -> int:
        for a, b in self.cycles:
            if value == a:
                return b
            if value == b:
                return a
        return value

    @property
    def text(self) -> str:
        if not self.cycles:
            return "()"
        return "".join(f"({a},{b})" for a, b in self.cycles)

    def __str__(self):
        return self.text


def parse_cycles(text: str, n: Optional[int] = None) -> Involution:
    """Parses "(i1,j1)(i2,j2)..." or "()"; n defaults to the largest entry."""
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "()"):
        if n is None:
            raise ParseError("the identity '()' needs an explicit n")
        return Involution.identity(n)
    pairs = [(int(a), int(b)) for a, b in _CYCLE_RE.findall(stripped)]
    if not pairs or _CYCLE_RE.sub("", stripped) != "":
        raise ParseError(f"expected cycles like '(1,4)(2,3)', got '{text}'")
    if n is None:
        n = max(max(pair) for pair in pairs)
    return Involution(n, tuple(pairs))


def sigma_of_tableau(tableau: TwoColumnTableau) -> Involution:
    """sigma_T: j_s is the s-th entry of the second column, i_s the largest unused
    entry of the first column below j_s."""
    available = list(tableau.col1)
    cycles = []
    for j in tableau.col2:
        below = [d for d in available if d < j]
        i = max(below)
        available.remove(i)
        cycles.append((i, j))
    return Involution(tableau.n, tuple(cycles))


def tableau_of_sigma(sigma: Involution) -> TwoColumnTableau:
    """Inverse of sigma_of_tableau: the second column is {j_1,...,j_k}.

    Raises NotASigmaImageError when sigma is not sigma_T for the rebuilt T.
    """
    col2 = tuple(sorted(sigma.seconds))
    taken = set(col2)
    col1 = tuple(v for v in range(1, sigma.n + 1) if v not in taken)
    try:
        tableau = tableau_from_columns(col1, col2)
    except TableauValidationError as exc:
        raise NotASigmaImageError(f"{sigma} is not a sigma_T image: {exc}") from exc
    if sigma_of_tableau(tableau) != sigma:
        raise NotASigmaImageError(
            f"{sigma} is not a sigma_T image (the tableau {tableau.text} gives {sigma_of_tableau(tableau)})"
        )
    return tableau


def r_stat(sigma: Involution, s: int) -> int:
    """r_s(sigma) = #{p : i_p < i_s, j_p < j_s} + #{p : j_p < i_s}, s is 1-based."""
    if not 1 <= s <= sigma.k:
        raise DomainError(f"s must lie in 1..{sigma.k}, got {s}")
    i_s, j_s = sigma.cycles[s - 1]
    nested = sum(1 for i_p, j_p in sigma.cycles if i_p < i_s and j_p < j_s)
    before = sum(1 for _, j_p in sigma.cycles if j_p < i_s)
    return nested + before


def orbit_dim(sigma: Involution) -> int:
    """dim B.N_sigma = kn - sum(j_s - i_s) - sum_{s>=2} r_s(sigma)."""
    k, n = sigma.k, sigma.n
    spread = sum(j - i for i, j in sigma.cycles)
    return k * n - spread - sum(r_stat(sigma, s) for s in range(2, k + 1))


def is_maximal_dimension(sigma: Involution) -> bool:
    """True exactly for the dense orbits sigma_T, where dim = k(n-k)."""
    return orbit_dim(sigma) == sigma.k * (sigma.n - sigma.k)


def sigma_o(n: int, k: int) -> Involution:
    """(1,n-k+1)(2,n-k+2)...(k,n), the unique minimal involution with k transpositions."""
    _check_two_column_params(n, k)
    return Involution(n, tuple((s, n - k + s) for s in range(1, k + 1)))


def count_involutions(n: int, k: int) -> int:
    """n! / (2^k k! (n-2k)!)."""
    if k < 0 or 2 * k > n:
        return 0
    return math.factorial(n) // (2 ** k * math.factorial(k) * math.factorial(n - 2 * k))


def involution_number(n: int) -> int:
    """|S_n^2| via a(n) = a(n-1) + (n-1) a(n-2)."""
    prev, cur = 1, 1
    for m in range(2, n + 1):
        prev, cur = cur, cur + (m - 1) * prev
    return cur


def iter_matchings(n: int) -> Iterator[Tuple[Pair, ...]]:
    """Every partial matching of {1..n}, each in canonical order."""
    used = [False] * (n + 2)
    pairs: List[Pair] = []

    def _extend(a: int):
        if a > n:
            yield tuple(pairs)
            return
        if used[a]:
            yield from _extend(a + 1)
            return
        yield from _extend(a + 1)
        for b in range(a + 1, n + 1):
            if used[b]:
                continue
            used[b] = True
            pairs.append((a, b))
            yield from _extend(a + 1)
            pairs.pop()
            used[b] = False

    yield from _extend(1)


def enumerate_involutions(n: int, k: Optional[int] = None) -> List[Involution]:
    """Involutions of S_n with k transpositions (all k when None), ordered by (k, cycles)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k is not None and (k < 0 or 2 * k > n):
        raise DomainError(f"need 0 <= 2k <= n, got n={n}, k={k}")
    found = [
        Involution(n, cycles)
        for cycles in iter_matchings(n)
        if k is None or len(cycles) == k
    ]
    found.sort(key=lambda sigma: (sigma.k, sigma.cycles))
    logger.debug("enumerate_involutions(n=%d, k=%s): %d", n, k, len(found))
    return found
