"""
Geometric re-derivation of parallel transports by path lifting.

The Lagrangian is ``SU(2)/Gamma`` with ``SU(2)`` acting on the left and
``Gamma`` on the right.  A path between critical points is lifted to the
unit quaternions starting at the chosen lift of its source; the group
element ``g`` with ``endpoint = lift(target) . g`` is its transport.

Pauli matrices are identified with quaternion units,
``sigma1 <-> i``, ``sigma2 <-> j``, ``sigma3 <-> k``, so a unit vector
``V`` in R^3 gives ``exp(t V) = cos t + sin t V`` and conjugation by it
rotates R^3 by ``2t`` about ``V`` (right-handed).

Floating point stays inside this module; :func:`identify_quaternion` is
the only way out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import paper_data
from .gamma import ELEMENTS, GammaElement, inverse

DEFAULT_TOLERANCE = 1e-6
CONVENTIONS = ("direct", "inverse")


class LiftError(ValueError):
    """A path could not be lifted or its endpoint is not over the basepoint."""


@dataclass(frozen=True)
class Quaternion:
    """``w + x i + y j + z k``, read as ``w I + x sigma1 + y sigma2 + z sigma3``."""

    w: float
    x: float
    y: float
    z: float

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        return _raw_mul(self, o).normalized()

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    inverse = conj  # unit quaternions

    def norm(self) -> float:
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        return Quaternion(self.w / n, self.x / n, self.y / n, self.z / n)

    def distance(self, o: "Quaternion") -> float:
        return math.sqrt((self.w - o.w) ** 2 + (self.x - o.x) ** 2
                         + (self.y - o.y) ** 2 + (self.z - o.z) ** 2)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def rotate(self, v: Sequence[float]) -> tuple[float, float, float]:
        """Adjoint action ``q v q^-1`` on R^3."""
        r = _raw_mul(_raw_mul(self, Quaternion(0.0, *v)), self.conj())
        return (r.x, r.y, r.z)


def _raw_mul(p: Quaternion, o: Quaternion) -> Quaternion:
    return Quaternion(
        p.w * o.w - p.x * o.x - p.y * o.y - p.z * o.z,
        p.w * o.x + p.x * o.w + p.y * o.z - p.z * o.y,
        p.w * o.y - p.x * o.z + p.y * o.w + p.z * o.x,
        p.w * o.z + p.x * o.y - p.y * o.x + p.z * o.w,
    )


IDENTITY_Q = Quaternion(1.0, 0.0, 0.0, 0.0)


def qexp(axis: Sequence[float], t: float) -> Quaternion:
    """``exp(t V)`` for a unit vector ``V`` in R^3."""
    s = math.sin(t)
    return Quaternion(math.cos(t), s * axis[0], s * axis[1], s * axis[2])


# geometry constants

_R3 = math.sqrt(3.0)
V_PRIME = ((0.0, 0.0, 1.0), (0.0, _R3 / 2, -0.5), (0.0, -_R3 / 2, -0.5))
V_AXES = ((0.0, -_R3 / 2, 0.5), (0.0, _R3 / 2, 0.5), (0.0, 0.0, -1.0))
SIGMA1 = (1.0, 0.0, 0.0)
H = qexp(SIGMA1, math.pi / 6)
T0 = math.acos(math.sqrt(2.0) / math.sqrt(3.0))
T1 = math.pi / 2 - T0
TRIANGLE = V_PRIME  # the base configuration; its stabiliser is Gamma


def _dot(u, v) -> float:
    return sum(a * b for a, b in zip(u, v))


def _cross(u, v) -> tuple[float, float, float]:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _signed_angle(v, w, n) -> float:
    """Right-handed rotation angle about unit ``n`` taking ``v`` to ``w``."""
    pv = [a - _dot(v, n) * b for a, b in zip(v, n)]
    pw = [a - _dot(w, n) * b for a, b in zip(w, n)]
    return math.atan2(_dot(n, _cross(pv, pw)), _dot(pv, pw))


# the group inside SU(2)

_A_Q = qexp(SIGMA1, math.pi / 3)
_B_Q = qexp((0.0, 0.0, 1.0), math.pi / 2)


def embed_gamma(g: GammaElement) -> Quaternion:
    """``a -> exp(pi/3 sigma1)``, ``b -> exp(pi/2 sigma3)``."""
    q = IDENTITY_Q
    for _ in range(g.i):
        q = q * _A_Q
    if g.j:
        q = q * _B_Q
    return q


_EMBEDDED = tuple((g, embed_gamma(g)) for g in ELEMENTS)


def identify_quaternion(q: Quaternion, tolerance: float = DEFAULT_TOLERANCE) -> GammaElement:
    """Nearest group element; raises :class:`LiftError` beyond ``tolerance``."""
    g, d = min(((g, q.distance(e)) for g, e in _EMBEDDED), key=lambda p: p[1])
    if d > tolerance:
        raise LiftError(f"not a deck transformation: nearest element {g} at distance {d:.3g}")
    return g


# paths

@dataclass(frozen=True)
class Arc:
    """``t -> exp(t angle axis) . anchor`` (or ``anchor . exp(...)``) for ``t`` in [0, 1]."""

    axis: tuple[float, float, float]
    angle: float
    anchor: Quaternion
    side: str = "left"

    def point(self, t: float) -> Quaternion:
        e = qexp(self.axis, t * self.angle)
        return e * self.anchor if self.side == "left" else self.anchor * e

    @property
    def start(self) -> Quaternion:
        return self.point(0.0)

    @property
    def end(self) -> Quaternion:
        return self.point(1.0)

    def reversed(self) -> "Arc":
        if self.side == "left":
            return Arc(self.axis, -self.angle, self.end, "left")
        return Arc(self.axis, -self.angle, self.end, "right")


def reverse_path(arcs: Sequence[Arc]) -> list[Arc]:
    return [a.reversed() for a in reversed(arcs)]


def lift_path(arcs: Iterable[Arc], start: Quaternion,
              tolerance: float = DEFAULT_TOLERANCE) -> Quaternion:
    """Continuous lift of a chain of arcs, each defined up to right ``Gamma``.

    Every arc is moved by the deck transformation that puts its start on the
    current endpoint; a start that is not over the current point raises.
    """
    current = start
    for k, arc in enumerate(arcs):
        try:
            g = identify_quaternion(arc.start.conj() * current, tolerance)
        except LiftError as exc:
            raise LiftError(f"discontinuous path at segment {k}: {exc}") from None
        current = arc.end * embed_gamma(g)
    return current


def lift_loop_endpoint(loop: Sequence[Arc], tolerance: float = DEFAULT_TOLERANCE) -> GammaElement:
    """Deck element at the end of the lift starting at Id of a loop at ``m'``."""
    end = lift_path(loop, IDENTITY_Q, tolerance)
    try:
        return identify_quaternion(end, tolerance)
    except LiftError as exc:
        raise LiftError(f"endpoint not over the basepoint: {exc}") from None


# critical points and identification paths

def _axis_sign(i: int) -> float:
    # the middle index is reached from the opposite side
    return -1.0 if i == 2 else 1.0


def identification_path(point: str) -> list[Arc]:
    """Arcs from Id to the chosen lift of a critical point."""
    if point == "m'":
        return []
    if point == "m":
        return [Arc(SIGMA1, math.pi / 6, IDENTITY_Q)]
    i = int(point[-1])
    c = _axis_sign(i) * math.pi / 4
    if point.startswith("x'"):
        return [Arc(V_PRIME[i - 1], c, IDENTITY_Q)]
    return identification_path("m") + [Arc(V_AXES[i - 1], c, H)]


def critical_lift(point: str) -> Quaternion:
    return lift_path(identification_path(point), IDENTITY_Q)


CRITICAL_POINTS = ("m'", "x'1", "x'2", "x'3", "x1", "x2", "x3", "m")


def path_element(source: str, target: str, arcs: Sequence[Arc], convention: str = "direct",
                 tolerance: float = DEFAULT_TOLERANCE) -> GammaElement:
    """Transport element of a path between two critical points.

    The loop ``ident(source) . path . ident(target)^-1`` is lifted from Id.
    ``convention`` chooses between the endpoint itself and its inverse.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    loop = identification_path(source) + list(arcs) + reverse_path(identification_path(target))
    g = lift_loop_endpoint(loop, tolerance)
    return g if convention == "direct" else inverse(g)


# Morse flowlines with explicit parametrisation

def _geodesic_flowlines() -> dict[str, tuple[str, str, list[Arc]]]:
    out: dict[str, tuple[str, str, list[Arc]]] = {}
    for i in (1, 2, 3):
        c = _axis_sign(i) * math.pi / 4
        lp = critical_lift(f"x'{i}")
        vp, v = V_PRIME[i - 1], V_AXES[i - 1]
        # descending manifold of x'_i: both halves of the circle through it
        out[f"gamma'{i}"] = (f"x'{i}", "m'", [Arc(vp, -c, lp)])
        out[f"~gamma'{i}"] = (f"x'{i}", "m'", [Arc(vp, c, lp)])
        # ascending manifold of x_i, traversed from m
        out[f"gamma{i}"] = ("m", f"x{i}", [Arc(v, c, H)])
        out[f"~gamma{i}"] = ("m", f"x{i}", [Arc(v, -c, H)])
    out["sigma"] = ("m", "m'", [Arc(SIGMA1, -math.pi / 6, H)])
    out["~sigma"] = ("m", "m'", [Arc(SIGMA1, math.pi / 6, H)])
    return out


# Morse flowlines from x_i to x'_j, traced numerically

def morse_function(q: Quaternion) -> float:
    """A Gamma-invariant perfect Morse function on the quotient.

    With ``q = u + v j`` (``u = w + x i``, ``v = y + z i``) it is
    ``-Re(u^6)/|u|^2 + Re(v^6)/|v|^2``.  Its critical orbits are exactly
    m' (min), x'_i (index 1), x_i (index 2) and m (max).
    """
    u = complex(q.w, q.x)
    v = complex(q.y, q.z)
    return -_phi(u) + _phi(v)


def _phi(c: complex) -> float:
    r2 = abs(c) ** 2
    return (c ** 6).real / r2 if r2 > 1e-300 else 0.0


def _dphi(c: complex) -> tuple[float, float]:
    r2 = abs(c) ** 2
    if r2 < 1e-300:
        return 0.0, 0.0
    c5 = c ** 5
    c6 = (c5 * c).real
    return ((6 * c5.real * r2 - 2 * c.real * c6) / (r2 * r2),
            (-6 * c5.imag * r2 - 2 * c.imag * c6) / (r2 * r2))


def morse_gradient(q: Quaternion) -> tuple[float, float, float, float]:
    """Round-metric gradient, as a tangent vector in R^4."""
    gu = _dphi(complex(q.w, q.x))
    gv = _dphi(complex(q.y, q.z))
    g = (-gu[0], -gu[1], gv[0], gv[1])
    p = q.as_tuple()
    radial = _dot(g, p)
    return tuple(a - radial * b for a, b in zip(g, p))


def _flow_step(p: tuple, ds: float) -> tuple:
    # unit-speed descent, RK4, renormalised onto the sphere
    def field(x):
        n = math.sqrt(sum(c * c for c in x))
        g = morse_gradient(Quaternion(*(c / n for c in x)))
        gn = math.sqrt(sum(c * c for c in g)) or 1.0
        return tuple(-c / gn for c in g)

    k1 = field(p)
    k2 = field(tuple(a + ds / 2 * b for a, b in zip(p, k1)))
    k3 = field(tuple(a + ds / 2 * b for a, b in zip(p, k2)))
    k4 = field(tuple(a + ds * b for a, b in zip(p, k3)))
    q = tuple(a + ds / 6 * (b1 + 2 * b2 + 2 * b3 + b4) for a, b1, b2, b3, b4 in zip(p, k1, k2, k3, k4))
    n = math.sqrt(sum(c * c for c in q))
    return tuple(c / n for c in q)


_FLOW_STEP = 0.01
_FLOW_MAX_STEPS = 2000


def descend(start: Quaternion, watch: Sequence[Quaternion] = ()) -> tuple[GammaElement, list[float]]:
    """Follow the descending flow to a lift of ``m'``.

    Returns the deck element reached and, for each watched point, the
    closest distance the trajectory came to it.
    """
    p = start.as_tuple()
    closest = [math.inf] * len(watch)
    for _ in range(_FLOW_MAX_STEPS):
        q = Quaternion(*p)
        for k, w in enumerate(watch):
            d = q.distance(w)
            if d < closest[k]:
                closest[k] = d
        g, d = min(((g, q.distance(e)) for g, e in _EMBEDDED), key=lambda t: t[1])
        if d < 2 * _FLOW_STEP:
            return g, closest
        p = _flow_step(p, _FLOW_STEP)
    raise LiftError("gradient flow did not reach the minimum")


def _orthonormal_complement(n: Sequence[float]) -> tuple[tuple, tuple]:
    helper = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
    e1 = _cross(n, helper)
    l1 = math.sqrt(_dot(e1, e1))
    e1 = tuple(c / l1 for c in e1)
    return e1, _cross(n, e1)


_SHOOT_RADIUS = 1e-3
_SHOOT_DIRECTIONS = 24
_BISECTIONS = 16


def unstable_flowlines(i: int) -> list[tuple[int, GammaElement, float]]:
    """The flowlines leaving ``x_i`` that end at index-1 points.

    The descending sphere of ``x_i`` is a circle of directions orthogonal to
    ``V_i``.  Generic directions fall to ``m'``; the four directions where the
    reached lift of ``m'`` jumps are the flowlines to some ``x'_j``.  Each is
    located by bisection and identified by the lift of ``x'_j`` it passes.

    Returns:
        ``(j, g, distance)`` per flowline, where the lift from ``x_i`` reaches
        ``lift(x'_j) . g`` and ``distance`` is its closest approach.
    """
    base = critical_lift(f"x{i}")
    e1, e2 = _orthonormal_complement(V_AXES[i - 1])
    watch_labels = [(j, g) for j in (1, 2, 3) for g, _ in _EMBEDDED]
    watch = [critical_lift(f"x'{j}") * embed_gamma(g) for j, g in watch_labels]

    def shoot(theta: float, track: bool = False):
        d = tuple(math.cos(theta) * a + math.sin(theta) * b for a, b in zip(e1, e2))
        return descend(qexp(d, _SHOOT_RADIUS) * base, watch if track else ())

    step = 2 * math.pi / _SHOOT_DIRECTIONS
    ends = [shoot(k * step)[0] for k in range(_SHOOT_DIRECTIONS)]
    out = []
    for k in range(_SHOOT_DIRECTIONS):
        if ends[k] == ends[(k + 1) % _SHOOT_DIRECTIONS]:
            continue
        lo, hi = k * step, (k + 1) * step
        for _ in range(_BISECTIONS):
            mid = (lo + hi) / 2
            if shoot(mid)[0] == ends[k]:
                lo = mid
            else:
                hi = mid
        _, closest = shoot(lo, track=True)
        best = min(range(len(watch)), key=closest.__getitem__)
        j, g = watch_labels[best]
        out.append((j, g, closest[best]))
    if len(out) != 4:
        raise LiftError(f"expected 4 flowlines out of x{i}, found {len(out)}")
    return out


def _delta_transports() -> dict[str, GammaElement]:
    # two flowlines between the same pair: the tilde goes to the larger normal form
    out: dict[str, GammaElement] = {}
    for i in (1, 2, 3):
        by_target: dict[int, list[GammaElement]] = {}
        for j, g, _ in unstable_flowlines(i):
            by_target.setdefault(j, []).append(g)
        for j, gs in by_target.items():
            gs.sort(key=lambda g: g.index)
            out[f"delta{i}{j}"] = gs[0]
            if len(gs) > 1:
                out[f"~delta{i}{j}"] = gs[1]
    return out


# discs

DISC_PAIRS = ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1))


def disc_axes() -> dict[str, tuple[float, float, float]]:
    """``F_ij`` (positive x) and ``B_ij`` (negative x) on both circles.

    ``S^1_p`` is the unit circle ``{x : x . p = -1/2}``.  The two circles
    for ``V'_i`` and ``V_j`` meet in two points symmetric under ``x -> -x``.
    """
    out = {}
    for i, j in DISC_PAIRS:
        p, q = V_PRIME[i - 1], V_AXES[j - 1]
        # solve in the yz-plane: (y, z) . p_yz = -1/2 and (y, z) . q_yz = -1/2
        det = p[1] * q[2] - p[2] * q[1]
        y = (-0.5 * q[2] + 0.5 * p[2]) / det
        z = (-0.5 * p[1] + 0.5 * q[1]) / det
        x = math.sqrt(max(0.0, 1.0 - y * y - z * z))
        out[f"F{i}{j}"] = (x, y, z)
        out[f"B{i}{j}"] = (-x, y, z)
    return out


def on_circle(v: Sequence[float], p: Sequence[float]) -> float:
    """Residual of ``v`` lying on ``S^1_p`` (unit sphere and plane)."""
    return max(abs(_dot(v, v) - 1.0), abs(_dot(v, p) + 0.5))


def _reduce(angle: float, center: float) -> float:
    # representative of angle mod pi/2 within pi/4 of center
    period = math.pi / 2
    return center + ((angle - center + period / 2) % period) - period / 2


def _locate(point: Quaternion, axis, base: Quaternion, center: float, tolerance: float) -> float:
    """``r`` with ``exp(r axis) . base`` over ``point``, closest to ``center``."""
    for g, e in _EMBEDDED:
        q = point * e * base.conj()
        # q must be exp(r axis): imaginary part parallel to axis
        s = _dot(q.vector, axis)
        if math.dist(q.vector, tuple(s * a for a in axis)) < tolerance:
            return _reduce(math.atan2(s, q.w), center)
    raise LiftError("point is not on the requested invariant circle")


def _vertices(q: Quaternion) -> list[tuple[float, float, float]]:
    return [q.rotate(v) for v in TRIANGLE]


def disc_geometry(label: str, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """Times and anchors for the disc trajectory with axis ``label``.

    The boundary is ``t -> exp(t axis) . exp(s0 V'_i)`` for ``t`` in
    ``[0, pi/2]``: it leaves the descending manifold of ``x'_i`` at ``t = 0``
    and meets the ascending manifold of ``x_j`` at ``t = t_y``.
    """
    axis = disc_axes()[label]
    i, j = int(label[1]), int(label[2])
    vp = V_PRIME[i - 1]
    # a vertex of Delta other than V'_i rotated about V'_i onto the axis
    other = next(v for v in TRIANGLE if abs(_dot(v, vp) - 1.0) > 0.5)
    s0 = _reduce(_signed_angle(other, axis, vp) / 2, math.pi / 4)
    anchor = qexp(vp, s0)
    # rotate about the axis until V_j becomes a vertex
    target = V_AXES[j - 1]
    candidates = []
    for v in _vertices(anchor):
        if math.dist(v, axis) < 1e-9:
            continue
        t = _signed_angle(v, target, axis) / 2 % (math.pi / 2)
        if 1e-9 < t < math.pi / 2 - 1e-9 and all(abs(t - c) > 1e-9 for c in candidates):
            candidates.append(t)
    if len(candidates) != 1:
        raise LiftError(f"{label}: ambiguous meeting time {candidates}")
    ty = candidates[0]
    return {"axis": axis, "s0": s0, "anchor": anchor, "ty": ty, "i": i, "j": j}


def trajectory_paths(label: str, tolerance: float = DEFAULT_TOLERANCE) -> tuple[list[Arc], list[Arc]]:
    """``gamma^0`` (x'_i to x_j) and ``gamma^1`` (x_j to x'_i) as arc chains."""
    geo = disc_geometry(label, tolerance)
    i, j, axis, anchor, ty = geo["i"], geo["j"], geo["axis"], geo["anchor"], geo["ty"]
    cp = _axis_sign(i) * math.pi / 4
    cx = _axis_sign(j) * math.pi / 4
    s0 = _reduce(geo["s0"], cp)
    y_prime = anchor
    y = qexp(axis, ty) * anchor
    r = _locate(y, V_AXES[j - 1], H, cx, 1e-6)
    lp = critical_lift(f"x'{i}")
    tau0 = Arc(V_PRIME[i - 1], s0 - cp, lp)
    tau1 = Arc(V_AXES[j - 1], cx - r, qexp(V_AXES[j - 1], r) * H)
    bottom = Arc(axis, ty, y_prime)
    top = Arc(axis, math.pi / 2 - ty, y)
    gamma0 = [tau0, bottom, tau1]
    gamma1 = [tau1.reversed(), top, tau0.reversed()]
    return gamma0, gamma1


def trajectory_transport_pair(label: str, convention: str = "direct",
                              tolerance: float = DEFAULT_TOLERANCE) -> tuple[GammaElement, GammaElement]:
    """``(G0, G1)`` for the bottom and top halves of the disc trajectory."""
    g0, g1 = trajectory_paths(label, tolerance)
    i, j = label[1], label[2]
    return (path_element(f"x'{i}", f"x{j}", g0, convention, tolerance),
            path_element(f"x{j}", f"x'{i}", g1, convention, tolerance))


def _split_disc(axis, anchor: Quaternion, t_mid: float, period: float) -> tuple[list[Arc], list[Arc]]:
    bottom = Arc(axis, t_mid, anchor)
    top = Arc(axis, period - t_mid, qexp(axis, t_mid) * anchor)
    return [bottom], [top]


def minimum_disc_boundary(i: int, convention: str = "direct",
                          tolerance: float = DEFAULT_TOLERANCE) -> GammaElement:
    """The boundary loop at ``m'`` of the Maslov-2 disc with axis ``V'_i``."""
    loop = [Arc(V_PRIME[i - 1], math.pi / 2, IDENTITY_Q)]
    g = lift_loop_endpoint(loop, tolerance)
    return g if convention == "direct" else inverse(g)


def disc_pair(name: str, convention: str = "direct",
              tolerance: float = DEFAULT_TOLERANCE) -> tuple[GammaElement, GammaElement]:
    """Half-boundary transports for ``u'i`` (m' -> x'_i), ``ui`` (x_i -> m), ``w1``, ``w-1`` (m' -> m)."""
    if name.startswith("u'"):
        i = int(name[-1])
        src, dst = "m'", f"x'{i}"
        axis, anchor, mid, period = V_PRIME[i - 1], IDENTITY_Q, math.pi / 4, math.pi / 2
    elif name.startswith("u"):
        i = int(name[-1])
        src, dst = f"x{i}", "m"
        axis, anchor, mid, period = V_AXES[i - 1], critical_lift(f"x{i}"), math.pi / 4, math.pi / 2
    elif name in ("w1", "w-1"):
        src, dst = "m'", "m"
        sign = 1.0 if name == "w1" else -1.0
        axis, anchor, mid, period = (sign, 0.0, 0.0), IDENTITY_Q, math.pi / 6, math.pi / 3
    else:
        raise KeyError(f"unknown disc {name!r}")
    bottom, top = _split_disc(axis, anchor, mid, period)
    return (path_element(src, dst, bottom, convention, tolerance),
            path_element(dst, src, top, convention, tolerance))


# the full table

def flowline_transport(flowline_id: str, convention: str = "direct",
                       tolerance: float = DEFAULT_TOLERANCE) -> GammaElement:
    """Transport along a named index-1 or index-3 flowline."""
    geo = _geodesic_flowlines()
    if flowline_id in geo:
        src, dst, arcs = geo[flowline_id]
        return path_element(src, dst, arcs, convention, tolerance)
    if "delta" in flowline_id:
        table = _delta_transports()
        if flowline_id in table:
            g = table[flowline_id]
            return g if convention == "direct" else inverse(g)
    raise KeyError(f"unknown flowline {flowline_id!r}")


def full_transport_table(convention: str = "direct",
                         tolerance: float = DEFAULT_TOLERANCE) -> dict[str, GammaElement]:
    """Every transport the differential uses, keyed by path name.

    Keys: flowline names (``"~gamma'2"``, ``"delta31"``, ...), ``"du'i"`` for
    boundaries at ``m'``, and ``"<disc>.gamma0"`` / ``"<disc>.gamma1"`` for
    half-boundaries of trajectories ``F_ij``, ``B_ij``, ``u'i``, ``ui``, ``w1``, ``w-1``.
    """
    fix = (lambda g: g) if convention == "direct" else inverse
    table: dict[str, GammaElement] = {}
    for name, (src, dst, arcs) in _geodesic_flowlines().items():
        table[name] = path_element(src, dst, arcs, convention, tolerance)
    for name, g in _delta_transports().items():
        table[name] = fix(g)
    for label in disc_axes():
        g0, g1 = trajectory_transport_pair(label, convention, tolerance)
        table[f"{label}.gamma0"], table[f"{label}.gamma1"] = g0, g1
    for i in (1, 2, 3):
        table[f"du'{i}"] = minimum_disc_boundary(i, convention, tolerance)
    for name in ("u'1", "u'2", "u'3", "u1", "u2", "u3", "w1", "w-1"):
        g0, g1 = disc_pair(name, convention, tolerance)
        table[f"{name}.gamma0"], table[f"{name}.gamma1"] = g0, g1
    return dict(sorted(table.items()))


def reference_table() -> dict[str, GammaElement]:
    """The printed values under the same keys."""
    ref: dict[str, GammaElement] = {}
    for name, text in paper_data.FLOWLINE_TRANSPORTS.items():
        ref[name] = paper_data.element(text)
    for name, text in paper_data.MINIMUM_DISC_BOUNDARIES.items():
        ref[name] = paper_data.element(text)
    for group in (paper_data.TRAJECTORY_PAIRS, paper_data.MINIMUM_DISC_PAIRS,
                  paper_data.MAXIMUM_DISC_PAIRS, paper_data.MASLOV4_PAIRS):
        for name, pair in group.items():
            g0, g1 = paper_data.pair(pair)
            ref[f"{name}.gamma0"], ref[f"{name}.gamma1"] = g0, g1
    return dict(sorted(ref.items()))


def compare_tables(computed: dict[str, GammaElement],
                   reference: dict[str, GammaElement] | None = None) -> list[tuple[str, str, str]]:
    """Mismatches as ``(name, expected, actual)``; missing keys count."""
    reference = reference_table() if reference is None else reference
    out = []
    for name, want in reference.items():
        got = computed.get(name)
        if got != want:
            out.append((name, str(want), "missing" if got is None else str(got)))
    return out


def convention_coherence(tolerance: float = DEFAULT_TOLERANCE) -> dict[str, list[tuple[str, str, str]]]:
    """Mismatch lists for both global conventions."""
    direct = full_transport_table("direct", tolerance)
    flipped = {k: inverse(v) for k, v in direct.items()}
    return {"direct": compare_tables(direct), "inverse": compare_tables(flipped)}
