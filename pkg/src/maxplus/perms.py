"""Small helpers for permutations given as tuples (sigma[i] = image of i, 0-based)."""

from __future__ import annotations

from typing import Iterable, Sequence


def check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError("not a permutation of 0..%d: %r" % (len(sigma) - 1, sigma))
    return sigma


def invert(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, j in enumerate(sigma):
        inv[j] = i
    return tuple(inv)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """The permutation i ↦ tau(sigma(i))."""
    return tuple(tau[sigma[i]] for i in range(len(sigma)))


def sign(sigma: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones (cycle-count parity)."""
    n = len(sigma)
    seen = [False] * n
    parity = 0
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def cycles(sigma: Sequence[int]) -> list[list[int]]:
    """Disjoint cycles, each starting at its smallest element, ordered by that element."""
    n = len(sigma)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = sigma[j]
        out.append(cyc)
    return out


def from_cycles(n: int, cycle_list: Iterable[Sequence[int]]) -> tuple[int, ...]:
    sigma = list(range(n))
    for cyc in cycle_list:
        for a, b in zip(cyc, cyc[1:]):
            sigma[a] = b
        if cyc:
            sigma[cyc[-1]] = cyc[0]
    return tuple(sigma)
