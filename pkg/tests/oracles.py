"""Brute-force reference computations, deliberately written with plain
loops and no package code, used as independent checks."""
import itertools
from collections import Counter


def hamming(x, z):
    return sum(1 for a, b in zip(x, z) if a != b)


def counts_by_scan(rows):
    m = len(rows[0])
    return [dict(Counter(r[j] for r in rows)) for j in range(m)]


def nearest_center(point, centers):
    best, best_d = None, None
    for l, c in enumerate(centers):
        d = hamming(point, c)
        if best_d is None or d < best_d:
            best, best_d = l, d
    return best


def cost(rows, assignment, centers):
    return sum(hamming(r, centers[a]) for r, a in zip(rows, assignment))


def min_cost_over_assignments(rows, centers):
    k = len(centers)
    return min(cost(rows, a, centers) for a in itertools.product(range(k), repeat=len(rows)))


def min_cost_single_center(rows):
    """Cheapest center drawn from the cross product of observed values."""
    m = len(rows[0])
    domains = [sorted({r[j] for r in rows}) for j in range(m)]
    return min(sum(hamming(r, c) for r in rows) for c in itertools.product(*domains))


def max_min_pick(rows, chosen):
    """Next farthest-point pick (lowest index on ties) and its separation."""
    best, best_d = None, -1
    for i, r in enumerate(rows):
        if i in chosen:
            continue
        d = min(hamming(r, rows[c]) for c in chosen)
        if d > best_d:
            best, best_d = i, d
    return best, best_d


def radius(rows, centers):
    return max(min(hamming(r, c) for c in centers) for r in rows)


def optimal_k_center_radius(rows, k):
    return min(radius(rows, [rows[i] for i in subset])
               for subset in itertools.combinations(range(len(rows)), k))


def majority_accuracy(assignment, labels):
    clusters = {}
    for a, y in zip(assignment, labels):
        clusters.setdefault(a, Counter())[y] += 1
    return sum(c.most_common(1)[0][1] for c in clusters.values()) / len(labels)
