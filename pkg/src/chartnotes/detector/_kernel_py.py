"""Pure-Python persistence sweep; the fallback when the compiled kernel
is unavailable. Both kernels must produce identical output for identical
input.
"""

from __future__ import annotations

import math
from typing import Sequence


def persistence_sweep(values: Sequence[float]) -> list[tuple[int, float, float, bool]]:
    """Superlevel-set merge sweep over a 1-D series.

    Visits indices in decreasing value order (ties: lower index first, so
    plateau peaks resolve to their leftmost index). An index with no
    previously visited neighbor births a component at its value; an index
    joining two components kills the one whose birth is lower (ties: the
    later-born one), recording death at the current value. The surviving
    component is the global maximum.

    Returns one ``(extremum_index, birth, death, is_global)`` tuple per
    local maximum. Finite pairs appear in merge order; the global pair is
    last with ``death = nan``. Callers validate length and finiteness.
    """
    n = len(values)
    order = sorted(range(n), key=lambda i: (-values[i], i))
    parent = list(range(n))
    birth_index = list(range(n))
    visited = [False] * n
    pairs: list[tuple[int, float, float, bool]] = []

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for idx in order:
        left_in = idx > 0 and visited[idx - 1]
        right_in = idx < n - 1 and visited[idx + 1]
        visited[idx] = True
        if not left_in and not right_in:
            continue  # birth: idx stays its own root, birth_index[idx] = idx
        if left_in and right_in:
            left_root = find(idx - 1)
            right_root = find(idx + 1)
            # Elder rule: the component born earlier in the sweep survives,
            # i.e. the one whose birth extremum has the higher value, or on
            # equal values the lower index.
            lb, rb = birth_index[left_root], birth_index[right_root]
            if (values[lb], -lb) >= (values[rb], -rb):
                elder, younger = left_root, right_root
            else:
                elder, younger = right_root, left_root
            dead = birth_index[younger]
            pairs.append((dead, values[dead], values[idx], False))
            parent[younger] = elder
            parent[idx] = elder
        else:
            parent[idx] = find(idx - 1 if left_in else idx + 1)

    survivor = birth_index[find(0)]
    pairs.append((survivor, values[survivor], math.nan, True))
    return pairs
