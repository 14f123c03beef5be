"""Forward and inverse kinematics for a 7-joint serial arm, plus the
tool-tip offset that lets the same solver place the tip of an attached
tool instead of the gripper.

The tool is rigidly attached along the gripper's local x-axis, so a
tool-tip target is converted to a gripper target by subtracting the
tool-length vector rotated into the target orientation; solving IK for
that gripper pose places the tip at the requested pose.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import InvariantViolation, NegativeLength, ParseError, Unreachable
from .mathcore import (
    Pose,
    Quat,
    Vec3,
    quat_angle,
    quat_from_axis_angle,
    quat_multiply,
    quat_normalize,
    quat_rotate,
    rotation_vector,
)

N_JOINTS = 7


@dataclass(frozen=True)
class JointSpec:
    axis: Vec3                  # unit rotation axis in the parent frame
    offset: Vec3                # meters, joint pivot -> next pivot, in this joint's frame
    limits: tuple[float, float]  # radians
    max_speed: float            # radians per control step


@dataclass(frozen=True)
class KinematicChain:
    base_pose: Pose
    joints: tuple[JointSpec, ...]
    gripper_offset: Vec3

    @property
    def reach(self) -> float:
        """Upper bound on gripper distance from base (sum of link norms)."""
        return sum(j.offset.norm() for j in self.joints) + self.gripper_offset.norm()

    @property
    def home_angles(self) -> tuple[float, ...]:
        """Mid-range angle for every joint; the canonical IK seed."""
        return tuple(0.5 * (j.limits[0] + j.limits[1]) for j in self.joints)


@dataclass(frozen=True)
class IkSettings:
    damping: float = 0.1      # Levenberg damping lambda
    pos_tol: float = 1e-4     # meters
    ori_tol: float = 1e-3     # radians
    max_iters: int = 200
    restarts: int = 10

    def __post_init__(self):
        if self.damping <= 0 or self.pos_tol <= 0 or self.ori_tol <= 0:
            raise InvariantViolation("IkSettings requires positive damping and tolerances")


def load_chain(config_text: str) -> KinematicChain:
    """Parse and validate a chain config (see data/default_chain.json)."""
    try:
        raw = json.loads(config_text)
    except json.JSONDecodeError as e:
        raise ParseError(f"chain config is not valid JSON: {e}") from e
    try:
        bp = raw["base_pose"]
        base = Pose(
            Vec3(*map(float, bp["position"])),
            quat_normalize(Quat(*map(float, bp["orientation"]))),
        )
        joints = []
        for j in raw["joints"]:
            axis = Vec3(*map(float, j["axis"]))
            n = axis.norm()
            if abs(n - 1.0) > 1e-6:
                raise InvariantViolation(f"joint axis must be unit length, got |a|={n}")
            lo, hi = map(float, j["limits"])
            if not lo < hi:
                raise InvariantViolation(f"joint limits must satisfy min < max, got [{lo}, {hi}]")
            speed = float(j["max_speed"])
            if speed <= 0:
                raise InvariantViolation("max_speed must be positive")
            joints.append(
                JointSpec(axis * (1.0 / n), Vec3(*map(float, j["offset"])), (lo, hi), speed)
            )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"chain config missing or malformed field: {e}") from e
    if len(joints) != N_JOINTS:
        raise InvariantViolation(f"chain must have exactly {N_JOINTS} joints, got {len(joints)}")
    chain = KinematicChain(base, tuple(joints), Vec3(*map(float, raw["gripper_offset"])))
    if chain.reach <= 0:
        raise InvariantViolation("chain has zero reach")
    return chain


def default_chain() -> KinematicChain:
    text = resources.files("toolkin.data").joinpath("default_chain.json").read_text()
    return load_chain(text)


def _fk_frames(chain: KinematicChain, angles) -> tuple[list[Vec3], list[Vec3], Vec3, Quat]:
    """One base-to-tip pass.

    Returns (joint pivot positions, world joint axes, gripper position,
    gripper orientation). Pivot i is where joint i rotates; its world axis
    is the parent-frame axis rotated by everything before it.
    """
    p = chain.base_pose.position
    q = chain.base_pose.orientation
    pivots: list[Vec3] = []
    axes: list[Vec3] = []
    for spec, theta in zip(chain.joints, angles):
        pivots.append(p)
        axes.append(quat_rotate(q, spec.axis))
        q = quat_multiply(q, quat_from_axis_angle(spec.axis, theta))
        p = p + quat_rotate(q, spec.offset)
    p = p + quat_rotate(q, chain.gripper_offset)
    return pivots, axes, p, q


def forward(chain: KinematicChain, angles) -> Pose:
    """Gripper pose for the given 7 joint angles."""
    _, _, p, q = _fk_frames(chain, angles)
    return Pose(p, q)


def jacobian(chain: KinematicChain, angles) -> np.ndarray:
    """Geometric Jacobian (6x7): rows 0-2 linear, rows 3-5 angular."""
    pivots, axes, p_end, _ = _fk_frames(chain, angles)
    jac = np.empty((6, N_JOINTS))
    for i in range(N_JOINTS):
        a = axes[i]
        r = p_end - pivots[i]
        jac[0:3, i] = a.cross(r)
        jac[3:6, i] = a
    return jac


def tooltip_offset(target: Pose, tool_length: float) -> Pose:
    """Gripper pose that places a tool tip (local +x, length L) at `target`."""
    if tool_length < 0:
        raise NegativeLength(f"tool_length must be >= 0, got {tool_length}")
    v = quat_rotate(target.orientation, Vec3(tool_length, 0.0, 0.0))
    return Pose(target.position - v, target.orientation)


def tooltip_of(gripper: Pose, tool_length: float) -> Vec3:
    """Tool tip position implied by a gripper pose (inverse of tooltip_offset)."""
    if tool_length < 0:
        raise NegativeLength(f"tool_length must be >= 0, got {tool_length}")
    return gripper.position + quat_rotate(gripper.orientation, Vec3(tool_length, 0.0, 0.0))


def _pose_error(target: Pose, pos: Vec3, ori: Quat) -> tuple[np.ndarray, float, float]:
    dp = target.position - pos
    rel = quat_multiply(target.orientation, ori.conjugate())
    rv = rotation_vector(rel)
    e = np.array([dp.x, dp.y, dp.z, rv.x, rv.y, rv.z])
    return e, dp.norm(), quat_angle(target.orientation, ori)


def _clamp_limits(chain: KinematicChain, angles: np.ndarray) -> np.ndarray:
    lo = np.array([j.limits[0] for j in chain.joints])
    hi = np.array([j.limits[1] for j in chain.joints])
    return np.clip(angles, lo, hi)


def solve_ik(
    chain: KinematicChain,
    target: Pose,
    seed,
    settings: IkSettings = IkSettings(),
    rng=None,
) -> tuple[float, ...]:
    """Damped-least-squares IK on the 6-D pose error.

    Iterates J^T (J J^T + lambda^2 I)^-1 e with joint-limit clamping each
    step and multiplicative damping backoff whenever a step would increase
    the squared error. After a stall, retries from uniformly random
    in-limit seeds up to `settings.restarts` times; raises Unreachable when
    every attempt is exhausted. Deterministic for a fixed `rng` seed.
    """
    if rng is None or isinstance(rng, int):
        rng = np.random.default_rng(0 if rng is None else rng)
    lo = np.array([j.limits[0] for j in chain.joints])
    hi = np.array([j.limits[1] for j in chain.joints])
    theta = _clamp_limits(chain, np.asarray(seed, dtype=float))

    for attempt in range(settings.restarts + 1):
        if attempt > 0:
            theta = rng.uniform(lo, hi)
        lam = settings.damping
        err, pos_err, ori_err = _pose_error(target, *_fk_frames(chain, theta)[2:])
        f = float(err @ err)
        it = 0
        while it < settings.max_iters:
            if pos_err < settings.pos_tol and ori_err < settings.ori_tol:
                return tuple(theta)
            jac = jacobian(chain, theta)
            jjt = jac @ jac.T
            jjt[np.diag_indices_from(jjt)] += lam * lam
            step = jac.T @ np.linalg.solve(jjt, err)
            trial = _clamp_limits(chain, theta + step)
            t_err, t_pos, t_ori = _pose_error(target, *_fk_frames(chain, trial)[2:])
            t_f = float(t_err @ t_err)
            it += 1
            if t_f <= f * (1.0 + 1e-12):
                theta, err, pos_err, ori_err, f = trial, t_err, t_pos, t_ori, t_f
                lam = max(settings.damping, 0.5 * lam)
            else:
                lam *= 10.0
                if lam > 1e8:  # stalled; trigger a restart
                    break
        else:
            if pos_err < settings.pos_tol and ori_err < settings.ori_tol:
                return tuple(theta)
    raise Unreachable(
        f"IK failed after {settings.restarts + 1} attempts; "
        f"last errors pos={pos_err:.3e} m ori={ori_err:.3e} rad"
    )


def solve_ik_tool(
    chain: KinematicChain,
    tooltip_target: Pose,
    tool_length: float,
    seed,
    settings: IkSettings = IkSettings(),
    rng=None,
) -> tuple[float, ...]:
    """IK for a tool-tip target: offset to a gripper target, then solve."""
    return solve_ik(chain, tooltip_offset(tooltip_target, tool_length), seed, settings, rng)


def reachable(chain: KinematicChain, pose: Pose, settings: IkSettings = IkSettings(), rng=None) -> bool:
    """Whether IK from the home seed (plus restarts) can reach `pose`."""
    # cheap precheck: outside the link-length ball nothing is solvable
    if pose.position.dist(chain.base_pose.position) > chain.reach:
        return False
    try:
        solve_ik(chain, pose, chain.home_angles, settings, rng)
        return True
    except Unreachable:
        return False
