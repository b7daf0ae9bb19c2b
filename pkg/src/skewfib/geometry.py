"""Floating-point geometry of fibrations of R^3 by skew oriented lines.

A fibration is described by a map ``B: R^2 -> R^2`` with ``B(0) = 0``.  The
domain plane sits in R^3 as ``{x3 = 0}`` and the fiber through ``y`` is the
line ``t -> (y + t B(y), t)``.  Lines are stored as ``(u, v)``: unit direction
``u`` (third coordinate positive for lines coming from a map) and the point
``v`` of the line closest to the origin.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

__all__ = [
    "GeometryError",
    "InvalidLineError",
    "NoProjectionError",
    "NoCapError",
    "FibrationCheckFailure",
    "DegeneratePairError",
    "InconsistentOrientationError",
    "KernelDegeneracyError",
    "CoverageUnverifiedError",
    "OrientedLine",
    "FibrationMap",
    "GreatCircle",
    "SphericalCap",
    "hopf_map",
    "scaled_hopf",
    "linear_map",
    "hopf_plus_radial",
    "tabulated_map",
    "load_tabulated_map",
    "pair_matrix",
    "line_through",
    "skew_check",
    "orientation_sign",
    "min_distance",
    "homotopy_to_hopf",
    "homotopy_distance_sq",
    "surjectivity_bound_check",
    "central_project",
    "great_circle_to_line",
    "direction_field",
    "hemisphere_and_circumcenter",
    "induced_circle_field",
    "fiber_through_point",
    "line_records",
    "write_lines_json",
    "write_lines_csv",
    "LINE_CSV_HEADER",
]

UNIT_TOL = 1e-12
GEOM_TOL = 1e-9

LINE_CSV_HEADER = ("y1", "y2", "u1", "u2", "u3", "v1", "v2", "v3")


class GeometryError(ValueError):
    pass


class InvalidLineError(GeometryError):
    pass


class NoProjectionError(GeometryError):
    pass


class NoCapError(GeometryError):
    pass


class FibrationCheckFailure(GeometryError):
    """A sampled check found evidence that a map is not a skew fibration.

    ``witness`` holds the offending sample in a JSON-friendly form.
    """

    kind = "check-failure"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DegeneratePairError(FibrationCheckFailure):
    kind = "degenerate-pair"


class InconsistentOrientationError(FibrationCheckFailure):
    kind = "inconsistent-orientation"


class KernelDegeneracyError(FibrationCheckFailure):
    kind = "kernel-degeneracy"


class CoverageUnverifiedError(FibrationCheckFailure):
    """Point inversion did not converge; this is not a proof of a gap."""

    kind = "coverage-unverified"


@dataclass(frozen=True, eq=False)
class OrientedLine:
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float).reshape(3)
        v = np.asarray(self.v, dtype=float).reshape(3)
        if abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
            raise InvalidLineError(f"direction {u} is not a unit vector")
        if abs(u @ v) > UNIT_TOL * max(1.0, np.linalg.norm(v)):
            raise InvalidLineError("basepoint is not orthogonal to the direction")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def point(self, t: float) -> np.ndarray:
        return self.v + t * self.u

    @property
    def distance(self) -> float:
        return float(np.linalg.norm(self.v))


@dataclass(frozen=True, eq=False)
class GreatCircle:
    """Great circle of S^3 given by an ordered orthonormal pair ``(e, f)``."""

    e: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.e, dtype=float).reshape(4)
        f = np.asarray(self.f, dtype=float).reshape(4)
        if (abs(np.linalg.norm(e) - 1) > UNIT_TOL or abs(np.linalg.norm(f) - 1) > UNIT_TOL
                or abs(e @ f) > UNIT_TOL):
            raise GeometryError("great circle basis must be orthonormal")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "f", f)

    def bivector(self) -> np.ndarray:
        """Plücker coordinates of the oriented plane ``e ^ f``."""
        return np.outer(self.e, self.f) - np.outer(self.f, self.e)

    def same_oriented_plane(self, other: "GreatCircle", tol: float = GEOM_TOL) -> bool:
        return bool(np.max(np.abs(self.bivector() - other.bivector())) <= tol)

    def point(self, theta: float) -> np.ndarray:
        return math.cos(theta) * self.e + math.sin(theta) * self.f


class FibrationMap:
    """Evaluatable map ``y -> B(y)`` on R^2, applied along the last axis.

    ``func`` must accept an array of shape ``(..., 2)`` and return the same
    shape.  Pass ``vectorized=False`` for functions of a single point.
    ``matrix`` marks a linear map so point inversion can be solved exactly.
    ``domain`` is an optional box ``((lo1, hi1), (lo2, hi2))`` outside which
    the map is not trusted.
    """

    def __init__(self, func: Callable, name: str = "custom", orientation: int = -1,
                 vectorized: bool = True, matrix=None, approximate: bool = False,
                 domain=None):
        if orientation not in (-1, 1):
            raise GeometryError("orientation must be -1 or +1")
        self._func = func
        self.name = name
        self.orientation = orientation
        self.vectorized = vectorized
        self.matrix = None if matrix is None else np.asarray(matrix, dtype=float)
        self.approximate = approximate
        self.domain = domain
        b0 = self(np.zeros(2))
        if np.max(np.abs(b0)) > GEOM_TOL:
            raise GeometryError(f"map {name!r} has B(0) = {b0}, expected 0")

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        if self.vectorized:
            return np.asarray(self._func(y), dtype=float)
        if y.ndim == 1:
            return np.asarray(self._func(y), dtype=float)
        return np.apply_along_axis(lambda p: np.asarray(self._func(p), dtype=float), -1, y)

    def __repr__(self) -> str:
        return f"FibrationMap({self.name!r}, orientation={self.orientation:+d})"


def _rot(y: np.ndarray) -> np.ndarray:
    # multiplication by i on R^2 = C
    return np.stack([-y[..., 1], y[..., 0]], axis=-1)


def hopf_map(orientation: int = -1) -> FibrationMap:
    """``y -> iy`` for orientation -1 and ``y -> -iy`` for orientation +1."""
    if orientation == -1:
        return FibrationMap(_rot, "hopf-neg", -1, matrix=[[0, -1], [1, 0]])
    if orientation == 1:
        return FibrationMap(lambda y: -_rot(y), "hopf-pos", 1, matrix=[[0, 1], [-1, 0]])
    raise GeometryError("orientation must be -1 or +1")


def scaled_hopf(alpha: float, orientation: int = -1) -> FibrationMap:
    if not alpha > 0:
        raise GeometryError("scale must be positive")
    sign = 1.0 if orientation == -1 else -1.0
    m = sign * alpha * np.array([[0.0, -1.0], [1.0, 0.0]])
    return FibrationMap(lambda y: sign * alpha * _rot(y), f"scaled:{alpha:g}",
                        orientation, matrix=m)


def linear_map(matrix, name: str = "linear") -> FibrationMap:
    """Linear ``B(y) = M y``; the orientation is read off from the sign of the
    quadratic form ``det([Mw, w])``, which must be definite."""
    m = np.asarray(matrix, dtype=float).reshape(2, 2)
    # det([Mw, w]) = w^T S w
    s = np.array([[-m[1, 0], (m[0, 0] - m[1, 1]) / 2],
                  [(m[0, 0] - m[1, 1]) / 2, m[0, 1]]])
    eig = np.linalg.eigvalsh(s)
    if eig[0] > 0:
        orientation = 1
    elif eig[1] < 0:
        orientation = -1
    else:
        raise GeometryError(f"linear map {m.tolist()} does not give skew lines")
    return FibrationMap(lambda y: y @ m.T, name, orientation, matrix=m)


def hopf_plus_radial(alpha: float, beta: float) -> FibrationMap:
    """``alpha * iy + beta * y``: negatively oriented for every ``alpha > 0``."""
    return linear_map([[beta, -alpha], [alpha, beta]], f"hopf+radial:{alpha:g},{beta:g}")


def tabulated_map(y1: Sequence[float], y2: Sequence[float], values,
                  name: str = "tabulated") -> FibrationMap:
    """Bilinear interpolation of ``B`` sampled on the grid ``y1 x y2``.

    ``values`` has shape ``(len(y1), len(y2), 2)``.  Points outside the grid
    are clamped to it.  Such maps are for verification only; results built on
    them are approximate.
    """
    g1 = np.asarray(y1, dtype=float)
    g2 = np.asarray(y2, dtype=float)
    vals = np.asarray(values, dtype=float)
    if vals.shape != (g1.size, g2.size, 2):
        raise GeometryError("tabulated values must have shape (n1, n2, 2)")

    def interp(y):
        y = np.asarray(y, dtype=float)
        a = np.clip(y[..., 0], g1[0], g1[-1])
        b = np.clip(y[..., 1], g2[0], g2[-1])
        i = np.clip(np.searchsorted(g1, a, side="right") - 1, 0, g1.size - 2)
        j = np.clip(np.searchsorted(g2, b, side="right") - 1, 0, g2.size - 2)
        s = ((a - g1[i]) / (g1[i + 1] - g1[i]))[..., None]
        t = ((b - g2[j]) / (g2[j + 1] - g2[j]))[..., None]
        return ((1 - s) * (1 - t) * vals[i, j] + s * (1 - t) * vals[i + 1, j]
                + (1 - s) * t * vals[i, j + 1] + s * t * vals[i + 1, j + 1])

    # orientation is a claim read from the table; verification decides
    probe = np.array([[g1[0], g2[0]], [g1[-1], g2[-1]]], dtype=float)
    d = skew_check_values(interp(probe[0]), probe[0], interp(probe[1]), probe[1])
    orientation = 1 if d > 0 else -1
    return FibrationMap(interp, name, orientation, approximate=True,
                        domain=((g1[0], g1[-1]), (g2[0], g2[-1])))


def load_tabulated_map(path) -> FibrationMap:
    """Read a TSV with columns ``y1 y2 B1 B2`` describing a full rectangular grid."""
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="\t")
        for rec in reader:
            if not rec or rec[0].startswith("#"):
                continue
            try:
                rows.append([float(x) for x in rec[:4]])
            except ValueError:
                continue  # header
    if not rows:
        raise GeometryError(f"no samples in {path}")
    data = np.array(rows)
    g1 = np.unique(data[:, 0])
    g2 = np.unique(data[:, 1])
    if g1.size < 2 or g2.size < 2 or len(data) != g1.size * g2.size:
        raise GeometryError("tabulated map must cover a full rectangular grid")
    vals = np.full((g1.size, g2.size, 2), np.nan)
    i = np.searchsorted(g1, data[:, 0])
    j = np.searchsorted(g2, data[:, 1])
    vals[i, j] = data[:, 2:4]
    if np.isnan(vals).any():
        raise GeometryError("tabulated map has missing grid points")
    return tabulated_map(g1, g2, vals, name=f"file:{path}")


def pair_matrix(B: FibrationMap, y) -> np.ndarray:
    """The 2x2 matrix with columns ``B(y)`` and ``y``."""
    y = np.asarray(y, dtype=float)
    return np.stack([B(y), y], axis=-1)


def line_through(B: FibrationMap, y) -> OrientedLine:
    y = np.asarray(y, dtype=float)
    b = B(y)
    d = np.array([b[0], b[1], 1.0])
    t = -(y @ b) / (1.0 + b @ b)
    v = np.array([y[0], y[1], 0.0]) + t * d
    u = d / np.linalg.norm(d)
    # remove rounding drift along u so the invariant holds to working precision
    v = v - (v @ u) * u
    return OrientedLine(u, v)


def skew_check_values(by, y, bz, z):
    """``det(A(y) - A(z))`` from precomputed values of ``B``; broadcasts."""
    db = np.asarray(by) - np.asarray(bz)
    dy = np.asarray(y) - np.asarray(z)
    return db[..., 0] * dy[..., 1] - db[..., 1] * dy[..., 0]


def skew_check(B: FibrationMap, y, z):
    """``det(A(y) - A(z))``: nonzero iff the fibers through ``y`` and ``z`` are skew.

    Broadcasts over leading axes of ``y`` and ``z``.
    """
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    det = skew_check_values(B(y), y, B(z), z)
    return float(det) if np.ndim(det) == 0 else det


def orientation_sign(B: FibrationMap, pairs: Iterable) -> int:
    """Common sign of ``det(A(y) - A(z))`` over sampled pairs ``(y, z)``.

    Raises :class:`DegeneratePairError` for a distinct pair whose fibers are
    not skew, and :class:`InconsistentOrientationError` (with the first
    violating pair) when the sign changes; either certifies that ``B`` is not
    a skew fibration.
    """
    arr = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs, dtype=float)
    if arr.size == 0:
        raise GeometryError("need at least one pair")
    arr = arr.reshape(-1, 2, 2)
    y, z = arr[:, 0], arr[:, 1]
    dets = skew_check(B, y, z)
    dets = np.atleast_1d(dets)
    distinct = np.any(y != z, axis=1)
    if not distinct.all():
        raise GeometryError("orientation sampling needs distinct pairs")
    sign = 0
    for k, d in enumerate(dets):
        if abs(d) < UNIT_TOL:
            raise DegeneratePairError(
                f"fibers through {y[k].tolist()} and {z[k].tolist()} are not skew",
                witness={"y": y[k].tolist(), "z": z[k].tolist(), "det": float(d)})
        s = 1 if d > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            raise InconsistentOrientationError(
                f"orientation flips at pair {y[k].tolist()}, {z[k].tolist()}",
                witness={"y": y[k].tolist(), "z": z[k].tolist(), "det": float(d)})
    return sign


def _dist_sq(y: np.ndarray, b: np.ndarray) -> np.ndarray:
    yy = np.sum(y * y, axis=-1)
    yb = np.sum(y * b, axis=-1)
    bb = np.sum(b * b, axis=-1)
    return np.maximum(yy - yb * yb / (1.0 + bb), 0.0)


def min_distance(B: FibrationMap, y):
    """Distance from the fiber through ``y`` to the origin; broadcasts."""
    y = np.asarray(y, dtype=float)
    d = np.sqrt(_dist_sq(y, B(y)))
    return float(d) if np.ndim(d) == 0 else d


def homotopy_to_hopf(B: FibrationMap, s: float) -> FibrationMap:
    """Straight-line homotopy ``B_s = s H + (1 - s) B`` to the Hopf map of the
    same orientation."""
    if not 0.0 <= s <= 1.0:
        raise GeometryError(f"homotopy parameter must lie in [0, 1], got {s}")
    H = hopf_map(B.orientation)
    if s == 0.0:
        return B
    if s == 1.0:
        return H
    matrix = None
    if B.matrix is not None:
        matrix = s * H.matrix + (1 - s) * B.matrix
    return FibrationMap(lambda y: s * H(y) + (1 - s) * B(y), f"{B.name}@s={s:g}",
                        B.orientation, matrix=matrix, approximate=B.approximate,
                        domain=B.domain)


def homotopy_distance_sq(B: FibrationMap, s: float, y):
    """Closed form of the squared distance from the ``B_s`` fiber through ``y``
    to the origin, written in terms of ``B`` itself (negative orientation)."""
    y = np.asarray(y, dtype=float)
    b = B(y)
    y1, y2 = y[..., 0], y[..., 1]
    b1, b2 = b[..., 0], b[..., 1]
    num = (1 - s) ** 2 * (y1 * b1 + y2 * b2) ** 2
    den = (s ** 2 * (y1 ** 2 + y2 ** 2) + (1 - s) ** 2 * (b1 ** 2 + b2 ** 2)
           + 2 * s * (1 - s) * (y1 * b2 - y2 * b1) + 1)
    return y1 ** 2 + y2 ** 2 - num / den


def surjectivity_bound_check(B: FibrationMap, s: float, samples) -> bool:
    """Check ``|B_s(y)|^2 >= s^2 |y|^2`` (up to 1e-9) at every sample."""
    if not 0.0 < s <= 1.0:
        raise GeometryError(f"surjectivity bound needs s in (0, 1], got {s}")
    if B.orientation != -1:
        raise GeometryError("surjectivity bound is stated for negatively oriented maps")
    y = np.asarray(samples, dtype=float).reshape(-1, 2)
    bs = homotopy_to_hopf(B, s)(y)
    lhs = np.sum(bs * bs, axis=-1)
    rhs = s ** 2 * np.sum(y * y, axis=-1)
    return bool(np.all(lhs >= rhs - GEOM_TOL))


def central_project(line: OrientedLine) -> GreatCircle:
    """Great circle of S^3 through the image of ``line`` placed in the tangent
    space at (0, 0, 0, 1); basis ``e = (u, 0)``, ``f = (v, 1)/sqrt(1+|v|^2)``."""
    if not isinstance(line, OrientedLine):
        raise InvalidLineError("expected an OrientedLine")
    u, v = line.u, line.v
    if abs(np.linalg.norm(u) - 1) > UNIT_TOL or abs(u @ v) > UNIT_TOL * max(1.0, np.linalg.norm(v)):
        raise InvalidLineError("line invariants violated")
    e = np.append(u, 0.0)
    f = np.append(v, 1.0) / math.sqrt(1.0 + v @ v)
    return GreatCircle(e, f)


def great_circle_to_line(c: GreatCircle) -> OrientedLine:
    """Inverse of :func:`central_project` on oriented planes."""
    e, f = c.e, c.f
    # h: unit vector of the plane with the largest last coordinate
    h = e[3] * e + f[3] * f
    nh = np.linalg.norm(h)
    if nh < GEOM_TOL:
        raise NoProjectionError("circle lies in the equator x4 = 0")
    h = h / nh
    d = f[3] * e - e[3] * f
    d = d / np.linalg.norm(d)
    # keep (d, h) in the orientation of (e, f)
    if (d @ e) * (h @ f) - (d @ f) * (h @ e) < 0:
        d = -d
    u = d[:3]
    v = h[:3] / h[3]
    v = v - (v @ u) * u
    return OrientedLine(u / np.linalg.norm(u), v)


def direction_field(B: FibrationMap, y) -> np.ndarray:
    """Unit direction ``(B1, B2, 1)/sqrt(1+|B|^2)`` of the fiber through ``y``."""
    b = B(np.asarray(y, dtype=float))
    d = np.concatenate([b, np.ones(b.shape[:-1] + (1,))], axis=-1)
    return d / np.linalg.norm(d, axis=-1, keepdims=True)


@dataclass(frozen=True)
class SphericalCap:
    center: np.ndarray
    radius: float
    open_hemisphere: bool
    support: tuple[int, ...] = field(default=())

    def contains(self, x, tol: float = GEOM_TOL) -> bool:
        return _angle(self.center, np.asarray(x, dtype=float)) <= self.radius + tol


def _angle(a: np.ndarray, b: np.ndarray) -> float:
    # atan2 form is accurate near 0 and pi
    return math.atan2(np.linalg.norm(np.cross(a, b)), float(a @ b))


def _cap1(a):
    return (a, 0.0)


def _cap2(a, b):
    m = a + b
    n = np.linalg.norm(m)
    if n < GEOM_TOL:
        raise NoCapError("antipodal directions have no enclosing cap")
    c = m / n
    return (c, _angle(c, a))


def _cap3(a, b, c):
    n = np.cross(b - a, c - a)
    nn = np.linalg.norm(n)
    if nn < 1e-15:
        # collinear on the sphere: the widest pair decides
        best = max((_cap2(x, y) for x, y in ((a, b), (a, c), (b, c))), key=lambda k: k[1])
        return best
    n = n / nn
    if n @ a < 0:
        n = -n
    return (n, _angle(n, a))


def _in_cap(cap, x, tol=1e-12):
    return _angle(cap[0], x) <= cap[1] + tol


def hemisphere_and_circumcenter(directions, seed: int = 0) -> SphericalCap:
    """Smallest spherical cap containing the given unit vectors.

    Move-to-front minidisk iteration on the sphere: caps are spanned by one,
    two or three support points.  ``open_hemisphere`` reports whether the cap
    radius is below pi/2.  The input order is shuffled with ``seed``; the
    result does not depend on it beyond rounding.
    """
    pts = np.asarray(directions, dtype=float).reshape(-1, 3)
    if len(pts) == 0:
        raise NoCapError("no directions given")
    pts = pts / np.linalg.norm(pts, axis=1, keepdims=True)
    if len(pts) > 1:
        tree = cKDTree(pts)
        dist, _ = tree.query(-pts, k=1)
        if np.min(dist) < 1e-9:
            raise NoCapError("antipodal directions have no enclosing cap")
    order = np.random.default_rng(seed).permutation(len(pts))
    P = pts[order]

    cap = _cap1(P[0])
    sup = (0,)
    for i in range(1, len(P)):
        if _in_cap(cap, P[i]):
            continue
        cap, sup = _cap1(P[i]), (i,)
        for j in range(i):
            if _in_cap(cap, P[j]):
                continue
            cap, sup = _cap2(P[i], P[j]), (i, j)
            for k in range(j):
                if not _in_cap(cap, P[k]):
                    cap, sup = _cap3(P[i], P[j], P[k]), (i, j, k)
    center, radius = cap
    return SphericalCap(center=np.asarray(center), radius=float(radius),
                        open_hemisphere=bool(radius < math.pi / 2 + GEOM_TOL),
                        support=tuple(int(order[s]) for s in sup))


def induced_circle_field(B: FibrationMap, radius: float = 1e-2, samples: int = 360):
    """Tangential part of ``B(y)`` along the circle ``|y| = radius``.

    Returns ``[(point_on_unit_circle, component), ...]``.  A vanishing
    component means ``A(y)`` has a kernel there and raises
    :class:`KernelDegeneracyError` naming that point.
    """
    if not radius > 0:
        raise GeometryError("radius must be positive")
    theta = 2 * np.pi * np.arange(samples) / samples
    unit = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    tangent = _rot(unit)
    comps = np.sum(B(radius * unit) * tangent, axis=-1)
    out = []
    for k in range(samples):
        c = float(comps[k])
        if abs(c) <= GEOM_TOL * radius:
            y = (radius * unit[k]).tolist()
            raise KernelDegeneracyError(
                f"tangential component of B vanishes at y = {y}",
                witness={"y": y, "component": c})
        out.append((unit[k], c))
    return out


def fiber_through_point(B: FibrationMap, x, tol: float = 1e-9, max_iter: int = 200) -> np.ndarray:
    """Find ``y`` whose fiber contains ``x``, i.e. ``y + x3 B(y) = (x1, x2)``.

    Linear maps are solved directly; otherwise damped Newton with a central
    finite-difference Jacobian.  Non-convergence raises
    :class:`CoverageUnverifiedError`.
    """
    x = np.asarray(x, dtype=float).reshape(3)
    target, t = x[:2], x[2]
    if B.matrix is not None:
        return np.linalg.solve(np.eye(2) + t * B.matrix, target)

    def resid(y):
        return y + t * B(y) - target

    y = target.copy()
    r = resid(y)
    h = 1e-7 * max(1.0, float(np.linalg.norm(target)))
    for _ in range(max_iter):
        nr = float(np.linalg.norm(r))
        if nr <= tol:
            return y
        J = np.empty((2, 2))
        for k in range(2):
            e = np.zeros(2)
            e[k] = h
            J[:, k] = (resid(y + e) - resid(y - e)) / (2 * h)
        try:
            step = np.linalg.solve(J, -r)
        except np.linalg.LinAlgError:
            step = -r
        lam = 1.0
        while lam > 1e-6:
            y_new = y + lam * step
            r_new = resid(y_new)
            if np.linalg.norm(r_new) < nr:
                break
            lam /= 2
        y, r = y_new, r_new
    if float(np.linalg.norm(r)) <= tol:
        return y
    raise CoverageUnverifiedError(
        f"no fiber found through {x.tolist()} (residual {float(np.linalg.norm(r)):.3g})",
        witness={"x": x.tolist(), "residual": float(np.linalg.norm(r))})


def line_records(B: FibrationMap, ys) -> list[dict]:
    """JSON-ready ``{"y", "u", "v"}`` records plus their great circles."""
    recs = []
    for y in np.asarray(ys, dtype=float).reshape(-1, 2):
        line = line_through(B, y)
        circ = central_project(line)
        recs.append({"y": y.tolist(), "u": line.u.tolist(), "v": line.v.tolist(),
                     "e": circ.e.tolist(), "f": circ.f.tolist()})
    return recs


def write_lines_json(records: list[dict], path) -> None:
    payload = {
        "lines": [{k: r[k] for k in ("y", "u", "v")} for r in records],
        "circles": [{k: r[k] for k in ("e", "f")} for r in records],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def write_lines_csv(records: list[dict], path, circles_path=None) -> None:
    """Lines to ``path``; great circles (``e1..e4, f1..f4``) to ``circles_path``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(LINE_CSV_HEADER)
        for r in records:
            w.writerow([repr(float(x)) for x in (*r["y"], *r["u"], *r["v"])])
    if circles_path is not None:
        with open(circles_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([f"e{i}" for i in range(1, 5)] + [f"f{i}" for i in range(1, 5)])
            for r in records:
                w.writerow([repr(float(x)) for x in (*r["e"], *r["f"])])
