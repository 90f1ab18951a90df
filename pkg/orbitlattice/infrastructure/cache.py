import hashlib
import logging
import threading
from typing import Dict, List, Optional, Tuple

import numpy as np

from orbitlattice.combinatorics.involutions import Involution, enumerate_involutions
from orbitlattice.combinatorics.rankmatrix import rank_array

logger = logging.getLogger(__name__)


class RankMatrixCache:
    """
    Memoises rank matrices and the per-n enumeration of S_n^2.
    Arrays handed out are read-only views; callers copy before mutating.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._matrices: Dict[Involution, np.ndarray] = {}
        self._stacks: Dict[int, Tuple[List[Involution], np.ndarray]] = {}

    @staticmethod
    def key(sigma: Involution) -> str:
        """Short stable digest naming a stored matrix in log lines."""
        return hashlib.md5(f"{sigma.n}:{sigma.text}".encode()).hexdigest()[:12]

    def rank_array(self, sigma: Involution) -> np.ndarray:
        with self._lock:
            cached = self._matrices.get(sigma)
        if cached is not None:
            return cached
        array = rank_array(sigma)
        array.setflags(write=False)
        with self._lock:
            stored = self._matrices.setdefault(sigma, array)
        if stored is array and logger.isEnabledFor(logging.DEBUG):
            logger.debug("[CACHE] Stored rank matrix %s for %s", self.key(sigma), sigma)
        return stored

    def involutions(self, n: int, k: Optional[int] = None) -> List[Involution]:
        sigmas, _ = self.stack(n)
        if k is None:
            return list(sigmas)
        return [sigma for sigma in sigmas if sigma.k == k]

    def stack(self, n: int) -> Tuple[List[Involution], np.ndarray]:
        """All of S_n^2 with their rank matrices stacked along axis 0."""
        with self._lock:
            cached = self._stacks.get(n)
        if cached is not None:
            return cached
        sigmas = enumerate_involutions(n)
        stacked = np.stack([self.rank_array(sigma) for sigma in sigmas])
        stacked.setflags(write=False)
        logger.debug("[CACHE] stacked %d rank matrices for n=%d", len(sigmas), n)
        with self._lock:
            return self._stacks.setdefault(n, (sigmas, stacked))

    def clear(self):
        with self._lock:
            self._matrices.clear()
            self._stacks.clear()


RANK_CACHE = RankMatrixCache()
