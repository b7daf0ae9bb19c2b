"""Complex and quaternionic skewness machinery.

Vectors and matrices over F in {R, C, H} are numpy arrays: real arrays for R,
complex arrays for C, and real arrays with a trailing axis of length 4,
``(w, x, y, z) = w + xi + yj + zk``, for H.

Matrices act on column vectors from the left, entry by entry, so the scalar
action that commutes with them is right multiplication.  The F-line through a
vector ``y`` is therefore ``{y * lam}``, and for H its real basis is
``y, y*i, y*j, y*k``.  For C the two sides agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = [
    "DivAlgError",
    "FIELD_DIM",
    "Quaternion",
    "qmul",
    "qconj",
    "left_block",
    "right_block",
    "FMatrix",
    "realify",
    "realify_vector",
    "numerical_rank",
    "f_kernel_check",
    "ComplexFibrationMap",
    "complex_fibration",
    "realified_system",
    "fiber_solve_complex",
    "f_line_basis",
    "f_tangent_project",
    "InducedFieldReport",
    "induced_f_fields",
    "random_unit_vectors",
]

FIELD_DIM = {"R": 1, "C": 2, "H": 4}
RANK_RTOL = 1e-9


class DivAlgError(ValueError):
    pass


def qmul(a, b) -> np.ndarray:
    """Hamilton product along the last axis; broadcasts."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def qconj(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return a * np.array([1.0, -1.0, -1.0, -1.0])


class Quaternion:
    __slots__ = ("c",)

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.c = np.array([w, x, y, z], dtype=float)

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        q = cls()
        q.c = np.asarray(a, dtype=float).reshape(4).copy()
        return q

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion.from_array(qmul(self.c, other.c))
        return Quaternion.from_array(self.c * float(other))

    def __rmul__(self, other):
        return Quaternion.from_array(self.c * float(other))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.c + other.c)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.c - other.c)

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_array(-self.c)

    def conj(self) -> "Quaternion":
        return Quaternion.from_array(qconj(self.c))

    def norm(self) -> float:
        return float(np.linalg.norm(self.c))

    def inverse(self) -> "Quaternion":
        n2 = float(self.c @ self.c)
        if n2 == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion.from_array(qconj(self.c) / n2)

    def __eq__(self, other) -> bool:
        return isinstance(other, Quaternion) and bool(np.array_equal(self.c, other.c))

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.c - other.c)) <= tol)

    def __repr__(self) -> str:
        w, x, y, z = self.c
        return f"Quaternion({w:g}, {x:g}, {y:g}, {z:g})"


QI = np.array([0.0, 1.0, 0.0, 0.0])
QJ = np.array([0.0, 0.0, 1.0, 0.0])
QK = np.array([0.0, 0.0, 0.0, 1.0])


def left_block(a) -> np.ndarray:
    """4x4 real matrix of ``x -> a x``."""
    w, x, y, z = np.asarray(a, dtype=float)
    return np.array([[w, -x, -y, -z],
                     [x, w, -z, y],
                     [y, z, w, -x],
                     [z, -y, x, w]])


def right_block(a) -> np.ndarray:
    """4x4 real matrix of ``x -> x a``."""
    w, x, y, z = np.asarray(a, dtype=float)
    return np.array([[w, -x, -y, -z],
                     [x, w, z, -y],
                     [y, -z, w, x],
                     [z, y, -x, w]])


def _complex_block(a: complex) -> np.ndarray:
    return np.array([[a.real, -a.imag], [a.imag, a.real]])


@dataclass(frozen=True, eq=False)
class FMatrix:
    """Matrix over R, C or H; H entries carry a trailing axis of length 4."""

    field: str
    entries: np.ndarray

    def __post_init__(self):
        if self.field not in FIELD_DIM:
            raise DivAlgError(f"unknown field {self.field!r}")
        a = np.asarray(self.entries)
        if self.field == "R":
            a = np.asarray(a, dtype=float)
            if a.ndim != 2:
                raise DivAlgError("real matrix must be 2-dimensional")
        elif self.field == "C":
            a = np.asarray(a, dtype=complex)
            if a.ndim != 2:
                raise DivAlgError("complex matrix must be 2-dimensional")
        else:
            a = np.asarray(a, dtype=float)
            if a.ndim != 3 or a.shape[-1] != 4:
                raise DivAlgError("quaternionic matrix must have shape (rows, cols, 4)")
        object.__setattr__(self, "entries", a)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape[:2]

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        _check_compatible(self, other)
        return FMatrix(self.field, self.entries - other.entries)

    def __add__(self, other: "FMatrix") -> "FMatrix":
        _check_compatible(self, other)
        return FMatrix(self.field, self.entries + other.entries)

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        if self.field != other.field or self.shape[1] != other.shape[0]:
            raise DivAlgError("incompatible matrices for product")
        if self.field != "H":
            return FMatrix(self.field, self.entries @ other.entries)
        prod = qmul(self.entries[:, :, None, :], other.entries[None, :, :, :]).sum(axis=1)
        return FMatrix("H", prod)

    def realify(self) -> np.ndarray:
        return realify(self)


def _check_compatible(a: FMatrix, b: FMatrix) -> None:
    if a.field != b.field:
        raise DivAlgError(f"field mismatch: {a.field} vs {b.field}")
    if a.shape != b.shape:
        raise DivAlgError(f"shape mismatch: {a.shape} vs {b.shape}")


def realify(m: FMatrix) -> np.ndarray:
    """Real matrix of the F-linear map, acting on stacked real coordinates."""
    if m.field == "R":
        return m.entries.copy()
    rows, cols = m.shape
    d = FIELD_DIM[m.field]
    out = np.zeros((d * rows, d * cols))
    for i in range(rows):
        for j in range(cols):
            blk = (_complex_block(m.entries[i, j]) if m.field == "C"
                   else left_block(m.entries[i, j]))
            out[d * i:d * i + d, d * j:d * j + d] = blk
    return out


def realify_vector(field: str, v) -> np.ndarray:
    """Stack real coordinates of an F-vector (matches :func:`realify`)."""
    if field == "R":
        return np.asarray(v, dtype=float).reshape(-1)
    if field == "C":
        v = np.asarray(v, dtype=complex).reshape(-1)
        return np.stack([v.real, v.imag], axis=-1).reshape(-1)
    if field == "H":
        return np.asarray(v, dtype=float).reshape(-1)
    raise DivAlgError(f"unknown field {field!r}")


def _from_real(field: str, x: np.ndarray):
    if field == "R":
        return x
    if field == "C":
        x = x.reshape(-1, 2)
        return x[:, 0] + 1j * x[:, 1]
    return x.reshape(-1, 4)


def numerical_rank(a: np.ndarray, rtol: float = RANK_RTOL) -> int:
    s = np.linalg.svd(np.asarray(a, dtype=float), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def f_kernel_check(field: str, Ay: FMatrix, Az: FMatrix) -> bool:
    """True when ``A(y) - A(z)`` has trivial kernel, i.e. the fibers are skew."""
    if Ay.field != field or Az.field != field:
        raise DivAlgError("matrix field does not match the requested field")
    diff = realify(Ay - Az)
    return numerical_rank(diff) == diff.shape[1]


@dataclass(frozen=True)
class ComplexFibrationMap:
    """``(y1, y2, ..., yn) -> (conj y2, -conj y1, ..., conj yn, -conj y(n-1))`` on C^n."""

    n: int

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=complex)
        if y.shape[-1] != self.n:
            raise DivAlgError(f"expected vectors in C^{self.n}")
        out = np.empty_like(y)
        out[..., 0::2] = np.conj(y[..., 1::2])
        out[..., 1::2] = -np.conj(y[..., 0::2])
        return out

    def pair_matrix(self, y) -> FMatrix:
        """``A(y)``: the n x 2 complex matrix with columns ``B(y)`` and ``y``."""
        y = np.asarray(y, dtype=complex).reshape(self.n)
        return FMatrix("C", np.stack([self(y), y], axis=-1))

    def fiber_point(self, y, t: complex) -> np.ndarray:
        return self(y) * t + np.asarray(y, dtype=complex)


def complex_fibration(n: int) -> ComplexFibrationMap:
    if n < 2 or n % 2:
        raise DivAlgError(f"paired-conjugate construction needs even n >= 2, got {n}")
    return ComplexFibrationMap(n)


def realified_system(n: int, t: complex) -> np.ndarray:
    """2n x 2n real matrix of ``y -> B(y) t + y``, with determinant ``(1+|t|^2)^n``."""
    if n < 2 or n % 2:
        raise DivAlgError(f"n must be even and >= 2, got {n}")
    a, b = complex(t).real, complex(t).imag
    block = np.array([[1.0, 0.0, a, b],
                      [0.0, 1.0, b, -a],
                      [-a, -b, 1.0, 0.0],
                      [-b, a, 0.0, 1.0]])
    return np.kron(np.eye(n // 2), block)


def fiber_solve_complex(n: int, t: complex, eta) -> np.ndarray:
    """The unique ``y`` whose fiber passes through ``(t, eta)``."""
    eta = np.asarray(eta, dtype=complex).reshape(n)
    x = np.linalg.solve(realified_system(n, t), realify_vector("C", eta))
    return _from_real("C", x)


def f_line_basis(field: str, y) -> list[np.ndarray]:
    """Real basis (as stacked real coordinates) of the F-line through ``y``."""
    if field == "R":
        return [realify_vector("R", y)]
    if field == "C":
        y = np.asarray(y, dtype=complex)
        return [realify_vector("C", y), realify_vector("C", 1j * y)]
    if field == "H":
        y = np.asarray(y, dtype=float).reshape(-1, 4)
        return [y.reshape(-1)] + [qmul(y, u).reshape(-1) for u in (QI, QJ, QK)]
    raise DivAlgError(f"unknown field {field!r}")


def f_tangent_project(field: str, y, w, tol: float = 1e-12):
    """Project ``w`` onto the F-tangent space at the unit vector ``y``."""
    ry = realify_vector(field, y)
    if abs(np.linalg.norm(ry) - 1.0) > tol:
        raise DivAlgError("f_tangent_project needs a unit vector y")
    rw = realify_vector(field, w).copy()
    # for unit y the line basis is orthonormal
    for b in f_line_basis(field, y):
        rw -= (rw @ b) * b
    return _from_real(field, rw)


def _f_span(field: str, w) -> list[np.ndarray]:
    # real vectors spanned by w * lam for lam in a real basis of F
    return f_line_basis(field, w) if field != "R" else [realify_vector("R", w)]


@dataclass(frozen=True)
class InducedFieldReport:
    field: str
    samples: int
    fields_per_point: int
    min_gram_det: float
    argmin: Optional[list]
    independent: bool

    def to_dict(self) -> dict:
        return {"field": self.field, "samples": self.samples,
                "fields_per_point": self.fields_per_point,
                "min_gram_det": self.min_gram_det, "argmin": self.argmin,
                "independent": self.independent}


def _columns(construction, y, field):
    cols = np.asarray(construction(y))
    if field == "H":
        return cols.reshape(cols.shape[0], -1, 4) if cols.ndim == 3 else cols.reshape(-1, 1, 4)
    return cols.reshape(cols.shape[0], -1) if cols.ndim == 2 else cols.reshape(-1, 1)


def induced_f_fields(field: str, construction: Callable, samples, include_hopf: bool = False,
                     threshold: float = 1e-9) -> InducedFieldReport:
    """Gram-determinant test of the fields induced on the unit sphere of F^q.

    ``construction(y)`` returns the ``p`` columns of ``B(y)`` (shape ``(q,)`` or
    ``(q, p)``; ``(q, 4)`` / ``(q, p, 4)`` for H).  At each sample the columns
    are projected to the F-tangent space and their real F-spans collected; with
    ``include_hopf`` the fields ``y*i`` (and ``y*j, y*k`` for H) are added.
    """
    if field not in FIELD_DIM:
        raise DivAlgError(f"unknown field {field!r}")
    best = np.inf
    arg = None
    nfields = 0
    count = 0
    for y in samples:
        cols = _columns(construction, y, field)
        vecs = []
        for j in range(cols.shape[1]):
            w = f_tangent_project(field, y, cols[:, j], tol=1e-9)
            vecs.extend(_f_span(field, w))
        if include_hopf and field != "R":
            vecs.extend(f_line_basis(field, y)[1:])
        V = np.array(vecs)
        g = float(np.linalg.det(V @ V.T))
        nfields = len(vecs)
        count += 1
        if g < best:
            best = g
            yy = np.asarray(y)
            arg = ([[float(z.real), float(z.imag)] for z in yy.reshape(-1)]
                   if np.iscomplexobj(yy) else yy.tolist())
    if count == 0:
        raise DivAlgError("no samples given")
    return InducedFieldReport(field, count, nfields, best, arg, bool(best > threshold))


def random_unit_vectors(field: str, q: int, count: int, rng: np.random.Generator):
    """Uniform samples on the unit sphere of F^q."""
    d = FIELD_DIM[field]
    x = rng.standard_normal((count, d * q))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    if field == "R":
        return x
    if field == "C":
        x = x.reshape(count, q, 2)
        return x[..., 0] + 1j * x[..., 1]
    return x.reshape(count, q, 4)
