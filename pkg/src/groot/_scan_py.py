"""Pure-Python tau scan (fallback for the compiled kernel)."""


def tau_extrema(e0, alphas, omegas, horizon):
    """Scan ``tau`` on ``[0, horizon]`` and return its collapsed extrema.

    ``Delta(n) = 1 - n*e0 - sum(ceil(n*w/a))`` and ``tau(n+1) = tau(n) + Delta(n)``.
    Plateaus collapse to one extremum.  ``tau(0) = 0`` is always the first
    minimum because ``Delta(0) = 1``.

    Returns ``(minima, maxima, rising)`` where ``rising`` tells whether the
    last nonzero step before the horizon went up.
    """
    a1, a2, a3 = alphas
    w1, w2, w3 = omegas
    minima = [0]
    maxima = []
    tau = 0
    rising = True
    for n in range(horizon):
        delta = 1 - n * e0 + (-n * w1) // a1 + (-n * w2) // a2 + (-n * w3) // a3
        if delta > 0:
            if not rising:
                minima.append(tau)
                rising = True
        elif delta < 0:
            if rising:
                maxima.append(tau)
                rising = False
        tau += delta
    return minima, maxima, rising
