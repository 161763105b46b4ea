"""Two-qubit X states: validation, Bloch parameters and closed-form spectrum.

An X state has nonzero entries only on the diagonal and the anti-diagonal::

    rho11   0      0      rho14
    0       rho22  rho23  0
    0       rho32  rho33  0
    rho41   0      0      rho44

It is described equivalently by seven real numbers: ``r``, ``s``, ``c3`` and
the two complex coherences ``c1 = 2(rho23 + rho14)``, ``c2 = 2(rho23 - rho14)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NotHermitian, NotPositive, NotXShaped, StateError, TraceNotOne

TOL_ZERO = 1e-9
TOL_HERM = 1e-9
TOL_TRACE = 1e-9
TOL_PSD = 1e-10
TOL_ROUNDTRIP = 1e-12
TOL_EIG = 1e-10

STATE_FORMAT = "xstate-v1"

# (row, col) of the eight entries that must vanish in an X state
_FORBIDDEN = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)]


@dataclass(frozen=True)
class XDensityMatrix:
    """Validated X-shaped density matrix.

    Only the independent entries are stored; ``rho41`` and ``rho32`` are the
    complex conjugates of ``rho14`` and ``rho23``.  Diagonal entries that are
    negative by less than ``TOL_PSD`` are clamped to zero.
    """

    rho11: float
    rho22: float
    rho33: float
    rho44: float
    rho14: complex = 0j
    rho23: complex = 0j

    def __post_init__(self):
        diag = [float(self.rho11), float(self.rho22), float(self.rho33), float(self.rho44)]
        if not all(math.isfinite(d) for d in diag):
            raise StateError("diagonal entries must be finite")
        for i, d in enumerate(diag):
            if d < -TOL_PSD:
                raise NotPositive(f"rho{i + 1}{i + 1} = {d!r} is negative")
        diag = [max(d, 0.0) for d in diag]
        for name, value in zip(("rho11", "rho22", "rho33", "rho44"), diag):
            object.__setattr__(self, name, value)
        object.__setattr__(self, "rho14", complex(self.rho14))
        object.__setattr__(self, "rho23", complex(self.rho23))

        trace = sum(diag)
        if abs(trace - 1.0) > TOL_TRACE:
            raise TraceNotOne(f"trace is {trace!r}, expected 1")
        if diag[1] * diag[2] < abs(self.rho23) ** 2 - TOL_PSD:
            raise NotPositive(
                f"rho22*rho33 = {diag[1] * diag[2]:.6g} < |rho23|^2 = {abs(self.rho23) ** 2:.6g}"
            )
        if diag[0] * diag[3] < abs(self.rho14) ** 2 - TOL_PSD:
            raise NotPositive(
                f"rho11*rho44 = {diag[0] * diag[3]:.6g} < |rho14|^2 = {abs(self.rho14) ** 2:.6g}"
            )

    @property
    def diagonal(self) -> tuple[float, float, float, float]:
        return (self.rho11, self.rho22, self.rho33, self.rho44)

    def matrix(self) -> np.ndarray:
        """Dense 4x4 complex matrix in the |00>, |01>, |10>, |11> basis."""
        m = np.diag(np.array(self.diagonal, dtype=complex))
        m[0, 3] = self.rho14
        m[3, 0] = self.rho14.conjugate()
        m[1, 2] = self.rho23
        m[2, 1] = self.rho23.conjugate()
        return m


@dataclass(frozen=True)
class BlochX:
    """Bloch parameters of an X state.

    ``b_sq`` is the largest eigenvalue of the 2x2 form
    ``[[|c1|^2, k], [k, |c2|^2]]`` with ``k = a1*b2 - a2*b1``; it is the
    most transverse coherence any measurement direction can pick up.
    Construction does not check positivity; use :func:`density_from_bloch`.
    """

    r: float
    s: float
    c3: float
    c1: complex = 0j
    c2: complex = 0j
    b_sq: float = field(init=False, repr=False)

    def __post_init__(self):
        for name in ("r", "s", "c3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        n1 = abs(self.c1) ** 2
        n2 = abs(self.c2) ** 2
        k = self.cross
        object.__setattr__(self, "b_sq", 0.5 * (n1 + n2 + math.sqrt((n1 - n2) ** 2 + 4.0 * k * k)))

    @property
    def b(self) -> float:
        return math.sqrt(self.b_sq)

    @property
    def cross(self) -> float:
        """Signed cross product ``a1*b2 - a2*b1`` of the two coherences."""
        return self.c1.real * self.c2.imag - self.c2.real * self.c1.imag

    def as_tuple(self):
        return (self.r, self.s, self.c3, self.c1, self.c2)

    def isclose(self, other: "BlochX", tol: float = TOL_ROUNDTRIP) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self.as_tuple(), other.as_tuple()))


@dataclass(frozen=True)
class SpectrumX:
    """The four eigenvalues, labelled as in the closed form (not sorted)."""

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float

    def as_array(self) -> np.ndarray:
        return np.array([self.lambda1, self.lambda2, self.lambda3, self.lambda4])


def validate_density(m) -> XDensityMatrix:
    """Check that ``m`` is a 4x4 X-shaped density matrix and wrap it.

    Raises
    ------
    NotXShaped
        A forbidden (non-X) entry exceeds ``TOL_ZERO`` in magnitude.
    NotHermitian
        ``m`` differs from its adjoint by more than ``TOL_HERM``.
    TraceNotOne, NotPositive
        From the :class:`XDensityMatrix` invariants.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise NotXShaped(f"expected a 4x4 matrix, got shape {m.shape}")
    for i, j in _FORBIDDEN:
        if abs(m[i, j]) > TOL_ZERO:
            raise NotXShaped(f"entry ({i + 1},{j + 1}) = {m[i, j]!r} must be zero")
    if np.max(np.abs(m - m.conj().T)) > TOL_HERM:
        raise NotHermitian("matrix is not Hermitian")
    if np.max(np.abs(np.diag(m).imag)) > TOL_HERM:
        raise NotHermitian("diagonal has an imaginary part")
    d = np.diag(m).real
    return XDensityMatrix(d[0], d[1], d[2], d[3], complex(m[0, 3]), complex(m[1, 2]))


def bloch_from_density(d: XDensityMatrix) -> BlochX:
    r = d.rho11 - d.rho44 + d.rho22 - d.rho33
    s = d.rho11 - d.rho44 - d.rho22 + d.rho33
    c3 = d.rho11 + d.rho44 - d.rho22 - d.rho33
    return BlochX(r, s, c3, 2.0 * (d.rho23 + d.rho14), 2.0 * (d.rho23 - d.rho14))


def density_from_bloch(p: BlochX) -> XDensityMatrix:
    """Inverse of :func:`bloch_from_density`; raises ``NotPositive`` for non-states."""
    return XDensityMatrix(
        0.25 * (1.0 + p.r + p.s + p.c3),
        0.25 * (1.0 + p.r - p.s - p.c3),
        0.25 * (1.0 - p.r + p.s - p.c3),
        0.25 * (1.0 - p.r - p.s + p.c3),
        0.25 * (p.c1 - p.c2),
        0.25 * (p.c1 + p.c2),
    )


def spectrum(p: BlochX) -> SpectrumX:
    q12 = math.sqrt((p.r + p.s) ** 2 + abs(p.c1 - p.c2) ** 2)
    q34 = math.sqrt((p.r - p.s) ** 2 + abs(p.c1 + p.c2) ** 2)
    return SpectrumX(
        0.25 * (1.0 + p.c3 + q12),
        0.25 * (1.0 + p.c3 - q12),
        0.25 * (1.0 - p.c3 + q34),
        0.25 * (1.0 - p.c3 - q34),
    )


def marginals(p: BlochX) -> tuple[float, float]:
    """z-components of the reduced states: rho_A = diag((1+r)/2, (1-r)/2), likewise s for B."""
    return p.r, p.s


# -- builtin states -------------------------------------------------------

def maximally_mixed() -> XDensityMatrix:
    return XDensityMatrix(0.25, 0.25, 0.25, 0.25)


def example2() -> XDensityMatrix:
    """Populations 0.437/0.154/0.037/0.372 with real corner coherence 0.1."""
    return XDensityMatrix(0.437, 0.154, 0.037, 0.372, rho14=0.1)


def example3() -> XDensityMatrix:
    """Populations 0.0783/0.125/0.125/0.6717 with inner coherence 0.1.

    Its conditional-entropy minimum sits strictly inside (0, 1) for strong
    enough measurements.
    """
    return XDensityMatrix(0.0783, 0.125, 0.125, 0.6717, rho23=0.1)


def werner(a: float) -> XDensityMatrix:
    """a|psi-><psi-| + (1-a) I/4."""
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"Werner parameter must lie in [0, 1], got {a!r}")
    return density_from_bloch(BlochX(0.0, 0.0, -a, -a, -a))


def bell_diagonal(c1: float, c2: float, c3: float) -> XDensityMatrix:
    """(I + sum_i c_i sigma_i x sigma_i)/4."""
    return density_from_bloch(BlochX(0.0, 0.0, c3, c1, c2))


def random_xstate(rng: np.random.Generator) -> XDensityMatrix:
    """A valid X state by construction.

    Populations are flat on the simplex; coherence magnitudes are uniform
    below their positivity bound and phases are uniform.
    """
    d = rng.dirichlet(np.ones(4))
    m14 = rng.uniform() * math.sqrt(d[0] * d[3])
    m23 = rng.uniform() * math.sqrt(d[1] * d[2])
    ph14, ph23 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    return XDensityMatrix(
        d[0], d[1], d[2], 1.0 - d[0] - d[1] - d[2],
        m14 * complex(math.cos(ph14), math.sin(ph14)),
        m23 * complex(math.cos(ph23), math.sin(ph23)),
    )


# -- JSON state format ----------------------------------------------------

def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _complex(v, name: str) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise StateError(f"{name} must be a number or a [re, im] pair")


def state_to_json(d: XDensityMatrix, *, bloch: bool = False) -> dict:
    if bloch:
        p = bloch_from_density(d)
        body = {"r": p.r, "s": p.s, "c3": p.c3, "c1": _pair(p.c1), "c2": _pair(p.c2)}
        return {"format": STATE_FORMAT, "bloch": body}
    return {
        "format": STATE_FORMAT,
        "rho": {"d": list(d.diagonal), "rho14": _pair(d.rho14), "rho23": _pair(d.rho23)},
    }


def state_from_json(obj: dict) -> XDensityMatrix:
    """Parse either the ``rho`` or the ``bloch`` variant of ``xstate-v1``."""
    if not isinstance(obj, dict):
        raise StateError("state document must be a JSON object")
    fmt = obj.get("format", STATE_FORMAT)
    if fmt != STATE_FORMAT:
        raise StateError(f"unsupported state format {fmt!r}")
    try:
        if "rho" in obj:
            rho = obj["rho"]
            diag = [float(v) for v in rho["d"]]
            if len(diag) != 4:
                raise StateError("rho.d must have four entries")
            return XDensityMatrix(
                *diag,
                rho14=_complex(rho.get("rho14", 0.0), "rho14"),
                rho23=_complex(rho.get("rho23", 0.0), "rho23"),
            )
        if "bloch" in obj:
            b = obj["bloch"]
            return density_from_bloch(
                BlochX(
                    float(b["r"]), float(b["s"]), float(b["c3"]),
                    _complex(b.get("c1", 0.0), "c1"), _complex(b.get("c2", 0.0), "c2"),
                )
            )
    except (KeyError, TypeError) as exc:
        raise StateError(f"malformed state document: {exc}") from exc
    raise StateError("state document needs a 'rho' or 'bloch' key")
