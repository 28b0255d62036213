"""Positive roots of a simply-laced diagram by reflection closure.

Used only as an independent oracle for structural counts: the number of
stable vertices per period of the knitted quiver must equal the number of
positive roots of the underlying diagram.
"""


def positive_roots(quiver):
    """All positive roots as tuples over quiver.vertices, via reflections."""
    n = len(quiver.vertices)
    idx = {v: i for i, v in enumerate(quiver.vertices)}
    adjacent = [[False] * n for _ in range(n)]
    for a in quiver.arrows:
        i, j = idx[a.source], idx[a.target]
        adjacent[i][j] = adjacent[j][i] = True

    def reflect(beta, i):
        # s_i(beta) = beta - <beta, alpha_i^v> alpha_i with simply-laced Cartan
        pairing = 2 * beta[i] - sum(beta[j] for j in range(n) if adjacent[i][j])
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            gamma = reflect(beta, i)
            if all(x >= 0 for x in gamma) and any(gamma) and gamma not in roots:
                roots.add(gamma)
                frontier.append(gamma)
    return sorted(roots)


def positive_root_count(quiver):
    return len(positive_roots(quiver))
