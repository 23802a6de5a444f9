"""Composite Gauss-Legendre rules on panels graded toward a singular point.

Each panel carries a spectral cumulative-integration matrix, so primitives of
functions sampled at the nodes are available at every node as well as at the
panel ends. This is what the nested (iterated) integrals need.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numpy.polynomial import legendre as L


@lru_cache(maxsize=None)
def gauss_rule(p: int):
    """Nodes, weights and cumulative matrix on [-1, 1].

    ``S @ f`` gives the integral from -1 to each node of the degree p-1
    interpolant of ``f``.
    """
    x, w = L.leggauss(p)
    V = L.legvander(x, p - 1)
    C = L.legint(np.eye(p), lbnd=-1, axis=0)
    S = L.legvander(x, p) @ C @ np.linalg.inv(V)
    return x, w, S


def graded_breakpoints(z: float, target: float, depth: int, split: int = 1) -> np.ndarray:
    """Breakpoints on [0, z] with panel sizes shrinking geometrically toward
    ``target`` (a point at or beyond z). Each graded panel is split into
    ``split`` equal pieces.
    """
    pts = [0.0]
    for j in range(1, depth + 1):
        t = target - target * 2.0 ** -j
        if t >= z:
            break
        pts.append(t)
    if pts[-1] < z:
        pts.append(z)
    pts = np.asarray(pts)
    if split > 1:
        fine = [pts[0]]
        for a, b in zip(pts[:-1], pts[1:]):
            fine.extend(a + (b - a) * np.arange(1, split + 1) / split)
        pts = np.asarray(fine)
    return pts


class PanelGrid:
    """Gauss-Legendre nodes on consecutive panels with cumulative integration."""

    def __init__(self, breakpoints, p: int):
        bp = np.asarray(breakpoints, dtype=float)
        x, w, S = gauss_rule(p)
        self.breakpoints = bp
        self.a = bp[:-1]
        self.h = (bp[1:] - bp[:-1]) / 2.0
        self.t = self.a[:, None] + self.h[:, None] * (1.0 + x[None, :])
        # 1 - t computed from the right panel end keeps relative accuracy near 1
        self.one_minus_t = (1.0 - bp[1:])[:, None] + self.h[:, None] * (1.0 - x[None, :])
        self.weights = self.h[:, None] * w[None, :]
        self._S = S

    @property
    def nodes(self) -> np.ndarray:
        return self.t.ravel()

    @property
    def flat_weights(self) -> np.ndarray:
        return self.weights.ravel()

    def integral(self, g: np.ndarray) -> float:
        return float(np.sum(g * self.weights))

    def cumulative(self, g: np.ndarray) -> tuple[np.ndarray, float]:
        """Primitive vanishing at the left end, at the nodes and at the right end."""
        inc = np.sum(g * self.weights, axis=1)
        start = np.concatenate(([0.0], np.cumsum(inc)[:-1]))
        inner = (g @ self._S.T) * self.h[:, None]
        return start[:, None] + inner, float(start[-1] + inc[-1])
