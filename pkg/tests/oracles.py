"""Independent brute-force oracles and random generators shared by the tests.

Everything here deliberately avoids the library's own algorithms: candidates
come from itertools, box points from a plain bounded recursion, and
comparable vectors from explicit mass transfers, so library results can be
checked against genuinely separate computations.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


def cwr_candidates(n, total, max_part=None):
    """All nonincreasing positive length-n tuples with the given sum.

    Uses combinations_with_replacement over a descending alphabet, which is
    a different mechanism than the library's pruned recursion.
    """
    cap = n - 1 if max_part is None else max_part
    out = []
    for tup in combinations_with_replacement(range(cap, 0, -1), n):
        if sum(tup) == total:
            out.append(tup)
    return out


def box_integer_points(lower, upper, total):
    """All nonincreasing integer points of a box with the given component sum."""
    n = len(lower)
    points = []

    def rec(i, remaining, bound, prefix):
        if i == n:
            if remaining == 0:
                points.append(tuple(prefix))
            return
        lo = max(int(lower[i]), 0)
        hi = min(int(upper[i]), bound, remaining - sum(int(lower[j]) for j in range(i + 1, n)))
        for value in range(hi, lo - 1, -1):
            prefix.append(value)
            rec(i + 1, remaining - value, value, prefix)
            prefix.pop()

    rec(0, int(total), int(total), [])
    return points


def prefix_dominates(big, small):
    """Plain prefix-sum check that ``small`` is majorized by ``big`` (equal sums)."""
    if sum(big) != sum(small):
        return False
    acc_b = acc_s = 0
    for b, s in zip(big, small):
        acc_b += b
        acc_s += s
        if acc_s > acc_b:
            return False
    return True


def random_nonincreasing(rng, n, low=1, high=9):
    return tuple(sorted((rng.randint(low, high) for _ in range(n)), reverse=True))


def transfer_down(rng, vec, steps=None):
    """Random balancing transfers: the result is majorized by the input.

    Each step moves mass from a strictly larger entry to a strictly smaller
    one (at most their gap), which can only flatten the sorted vector.
    """
    values = list(vec)
    n = len(values)
    if steps is None:
        steps = rng.randint(0, 2 * n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if values[i] == values[j]:
            continue
        if values[i] < values[j]:
            i, j = j, i
        delta = rng.randint(0, values[i] - values[j])
        values[i] -= delta
        values[j] += delta
    return tuple(sorted(values, reverse=True))


def random_nested_boxes(rng, n_max=6, value_max=8):
    """A random integer box pair (inner, outer) with inner contained in outer.

    Returns (total, inner_lower, inner_upper, outer_lower, outer_upper); the
    total is feasible for the inner box and therefore for the outer one.
    """
    n = rng.randint(1, n_max)
    inner_upper = sorted((rng.randint(0, value_max) for _ in range(n)), reverse=True)
    inner_lower = []
    previous = None
    for i in range(n):
        cap = inner_upper[i] if previous is None else min(inner_upper[i], previous)
        low = rng.randint(0, cap)
        inner_lower.append(low)
        previous = low
    outer_upper = [u + rng.randint(0, 3) for u in inner_upper]
    for i in range(n - 2, -1, -1):  # re-sort upward without dropping below inner
        outer_upper[i] = max(outer_upper[i], outer_upper[i + 1])
    outer_lower = [max(0, low - rng.randint(0, 3)) for low in inner_lower]
    for i in range(1, n):  # re-sort downward without rising above inner
        outer_lower[i] = min(outer_lower[i], outer_lower[i - 1])
    total = rng.randint(sum(inner_lower), sum(inner_upper))
    return total, tuple(inner_lower), tuple(inner_upper), tuple(outer_lower), tuple(outer_upper)
