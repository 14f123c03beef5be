"""Vector, quaternion, and pose algebra.

Conventions
-----------
- Quaternions are stored as (w, x, y, z), unit-norm, everywhere in the
  package including files on disk.
- q and -q denote the same rotation; angle metrics are sign-invariant.
- Vectors are meters unless stated otherwise; angles are radians.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .errors import EmptyList, ZeroQuaternion


class Vec3(NamedTuple):
    x: float
    y: float
    z: float

    def __add__(self, other: "Vec3") -> "Vec3":  # type: ignore[override]
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "Vec3":  # type: ignore[override]
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def dist(self, other: "Vec3") -> float:
        return (self - other).norm()


ZERO3 = Vec3(0.0, 0.0, 0.0)


class Quat(NamedTuple):
    w: float
    x: float
    y: float
    z: float

    def conjugate(self) -> "Quat":
        return Quat(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(
            self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
        )


IDENTITY = Quat(1.0, 0.0, 0.0, 0.0)


class Pose(NamedTuple):
    position: Vec3
    orientation: Quat


def quat_normalize(q: Quat) -> Quat:
    """Scale q to unit norm.

    Raises ZeroQuaternion when the norm is at or below 1e-12; direction
    (including sign) is preserved.
    """
    n = q.norm()
    if n <= 1e-12:
        raise ZeroQuaternion(f"cannot normalize quaternion with norm {n}")
    return Quat(q.w / n, q.x / n, q.y / n, q.z / n)


def quat_multiply(a: Quat, b: Quat) -> Quat:
    """Hamilton product a*b, renormalized to absorb drift."""
    w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z
    x = a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y
    y = a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x
    z = a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w
    return quat_normalize(Quat(w, x, y, z))


def quat_rotate(q: Quat, v: Vec3) -> Vec3:
    """Rotate v by unit quaternion q (computes q v q^-1)."""
    # v' = v + 2w(u x v) + 2(u x (u x v)) with u the vector part
    ux, uy, uz = q.x, q.y, q.z
    cx = uy * v.z - uz * v.y
    cy = uz * v.x - ux * v.z
    cz = ux * v.y - uy * v.x
    ccx = uy * cz - uz * cy
    ccy = uz * cx - ux * cz
    ccz = ux * cy - uy * cx
    return Vec3(
        v.x + 2.0 * (q.w * cx + ccx),
        v.y + 2.0 * (q.w * cy + ccy),
        v.z + 2.0 * (q.w * cz + ccz),
    )


def quat_angle(a: Quat, b: Quat) -> float:
    """Geodesic angle between two unit quaternions, in [0, pi].

    Sign-invariant: quat_angle(q, -q) == 0.
    """
    d = abs(a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z)
    if d > 1.0:
        d = 1.0
    return 2.0 * math.acos(d)


def quat_average(qs: Iterable[Quat]) -> Quat:
    """Sign-aligned component-wise mean of unit quaternions, normalized.

    Valid for clustered rotations: each element is flipped to the
    hemisphere of the first before averaging, so q and -q inputs agree.
    """
    qs = list(qs)
    if not qs:
        raise EmptyList("quat_average of empty list")
    first = qs[0]
    sw = sx = sy = sz = 0.0
    for q in qs:
        if first.w * q.w + first.x * q.x + first.y * q.y + first.z * q.z < 0.0:
            q = Quat(-q.w, -q.x, -q.y, -q.z)
        sw += q.w
        sx += q.x
        sy += q.y
        sz += q.z
    n = len(qs)
    return quat_normalize(Quat(sw / n, sx / n, sy / n, sz / n))


def quat_from_axis_angle(axis: Vec3, angle: float) -> Quat:
    """Unit quaternion for a rotation of `angle` about unit `axis`."""
    half = 0.5 * angle
    s = math.sin(half)
    return quat_normalize(
        Quat(math.cos(half), axis.x * s, axis.y * s, axis.z * s)
    )


def quat_to_axis_angle(q: Quat) -> tuple[Vec3, float]:
    """Decompose a unit quaternion into (unit axis, angle in [0, pi]).

    For near-identity rotations the axis defaults to +x.
    """
    w, x, y, z = q
    if w < 0.0:  # canonical hemisphere so the angle lands in [0, pi]
        w, x, y, z = -w, -x, -y, -z
    s = math.sqrt(x * x + y * y + z * z)
    angle = 2.0 * math.atan2(s, w)
    if s < 1e-12:
        return Vec3(1.0, 0.0, 0.0), angle
    return Vec3(x / s, y / s, z / s), angle


def rotation_vector(q: Quat) -> Vec3:
    """Axis-angle vector (axis * angle) of a unit quaternion."""
    axis, angle = quat_to_axis_angle(q)
    return axis * angle


def quat_step_toward(current: Quat, desired: Quat, max_angle: float) -> Quat:
    """Rotate from `current` toward `desired`, capping the step angle.

    Returns `desired` when it is within `max_angle`; otherwise the rotation
    about the same axis truncated to `max_angle`.
    """
    rel = quat_multiply(current.conjugate(), desired)
    axis, angle = quat_to_axis_angle(rel)
    if angle <= max_angle:
        return desired
    return quat_multiply(current, quat_from_axis_angle(axis, max_angle))
