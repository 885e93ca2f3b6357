"""r-modular sequences, the winding-number formula and the twelve-point identity.

Indices follow the cyclic convention v_0 = v_k and v_{k+1} = v_1. In code the
lists are 0-based, so ``eps[i]`` belongs to the pair (v_i, v_{i+1}) and
``coeffs[i]`` to the vertex v_i.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import gcd

import numpy as np

from ..domain.models import (
    DualSequence,
    FanoPolygon,
    LatticeVector,
    RationalVector,
    RModularSequence,
)
from .exceptions import (
    GenerationExhausted,
    InvalidParameters,
    NonIntegralWinding,
    NonUniformDeterminant,
    NotPrimitive,
    SequenceError,
    ZeroDeterminant,
)
from .lattice import VectorInput, as_vector, det2, geometric_winding, is_primitive

logger = logging.getLogger(__name__)

MAX_GENERATOR_RETRIES = 10_000
COEFFICIENT_RANGE = (-2, 2)


def _solve_coefficient(v: LatticeVector, rhs: LatticeVector, index: int) -> int:
    """Integer a with a*v = rhs; both equations must agree."""
    if v.x != 0:
        a, rem = divmod(rhs.x, v.x)
        consistent = rem == 0 and a * v.y == rhs.y
    else:
        a, rem = divmod(rhs.y, v.y)
        consistent = rem == 0 and rhs.x == 0
    if not consistent:
        raise SequenceError(f"Recurrence coefficient at vector {index} is not an integer")
    return a


def build_sequence(vectors: Sequence[VectorInput]) -> RModularSequence:
    points = [as_vector(v) for v in vectors]
    k = len(points)
    if k < 2:
        raise InvalidParameters(f"An r-modular sequence needs at least 2 vectors, got {k}")
    for i, v in enumerate(points):
        if not is_primitive(v):
            raise NotPrimitive(i, v)

    dets = [det2(points[i], points[(i + 1) % k]) for i in range(k)]
    for i, d in enumerate(dets):
        if d == 0:
            raise ZeroDeterminant(i)
    r = abs(dets[0])
    for i, d in enumerate(dets):
        if abs(d) != r:
            raise NonUniformDeterminant(i, r, abs(d))
    eps = tuple(d // r for d in dets)

    coeffs = []
    for i, v in enumerate(points):
        before, after = points[i - 1], points[(i + 1) % k]
        rhs = -(before * eps[i - 1] + after * eps[i])
        coeffs.append(_solve_coefficient(v, rhs, i))
    return RModularSequence(tuple(points), r, eps, tuple(coeffs))


def sequence_of(polygon: FanoPolygon) -> RModularSequence:
    """Sequence of the vertices of a polygon whose edges all have the same determinant."""
    return build_sequence(polygon.vertices)


def parallelogram_interior_points(u: LatticeVector, v: LatticeVector) -> int:
    """Interior lattice points of the parallelogram on u and v, by Pick's theorem."""
    area = abs(det2(u, v))
    boundary = 2 * (gcd(u.x, u.y) + gcd(v.x, v.y))
    return area - boundary // 2 + 1


def winding_from_formula(seq: RModularSequence) -> int:
    numerator = sum(seq.coeffs) + 3 * sum(seq.eps)
    if numerator % 12:
        raise NonIntegralWinding(numerator)
    return numerator // 12


def dual_sequence(seq: RModularSequence) -> DualSequence:
    vectors: list[RationalVector] = []
    for i, v in enumerate(seq.vectors):
        prev = seq.vectors[i - 1]
        d = det2(prev, v)
        vectors.append((Fraction(v.x - prev.x, d), Fraction(v.y - prev.y, d)))
    return DualSequence(tuple(vectors))


def _rational_det(p: RationalVector, q: RationalVector) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def dual_determinants(seq: RModularSequence) -> list[Fraction]:
    """det(w_i, w_{i+1}) for every i."""
    w = dual_sequence(seq).vectors
    k = len(w)
    return [_rational_det(w[i], w[(i + 1) % k]) for i in range(k)]


def expected_dual_determinants(seq: RModularSequence) -> list[Fraction]:
    """(a_i + eps_i + eps_{i-1}) / r for every i."""
    return [
        Fraction(seq.coeffs[i] + seq.eps[i] + seq.eps[i - 1], seq.r) for i in range(seq.k)
    ]


def boundary_sum(seq: RModularSequence) -> int:
    k = seq.k
    return sum(det2(seq.vectors[i], seq.vectors[(i + 1) % k]) for i in range(k))


def boundary_sum_dual(seq: RModularSequence) -> Fraction:
    return sum(dual_determinants(seq), Fraction(0))


def twelve_point_residual(seq: RModularSequence) -> Fraction:
    """B(P)/r + r*B(P dual) - 12*w(P); zero for every r-modular sequence."""
    winding = geometric_winding(seq.vectors)
    return Fraction(boundary_sum(seq), seq.r) + seq.r * boundary_sum_dual(seq) - 12 * winding


def max_norm_index(seq: RModularSequence) -> int:
    """Index of the longest vector; the first one wins ties."""
    norms = [v.x * v.x + v.y * v.y for v in seq.vectors]
    return norms.index(max(norms))


# Generator --------------------------------------------------------------------


def _random_unimodular(rng: np.random.Generator) -> tuple[int, int, int, int]:
    a, b, c, d = 1, 0, 0, 1
    for _ in range(int(rng.integers(1, 4))):
        m = int(rng.integers(-2, 3))
        if rng.integers(0, 2):
            a, b = a + m * c, b + m * d
        else:
            c, d = c + m * a, d + m * b
    if rng.integers(0, 2):
        a, b = -a, -b
    return a, b, c, d


def _seed_pair(r: int, rng: np.random.Generator) -> tuple[LatticeVector, LatticeVector]:
    if r == 1:
        s = 0
    else:
        choices = [s for s in range(1, r) if gcd(r, s) == 1]
        s = choices[int(rng.integers(0, len(choices)))]
    a, b, c, d = _random_unimodular(rng)
    u = LatticeVector(a * r - b * s, c * r - d * s)
    w = LatticeVector(b, d)
    return u, w


def _try_close(
    r: int, k: int, rng: np.random.Generator
) -> list[LatticeVector] | None:
    v1, v2 = _seed_pair(r, rng)
    eps: list[int] = rng.choice([-1, 1], size=k).tolist()
    low, high = COEFFICIENT_RANGE
    draws: list[int] = rng.integers(low, high + 1, size=k).tolist()
    if det2(v1, v2) != eps[0] * r:
        v1, v2 = v2, v1
    points = [v1, v2]
    if k == 2:
        return points

    # Free steps produce v_3 .. v_{k-1}; v_k is solved so det(v_k, v_1) = +-r.
    for i in range(1, k - 2):
        a = draws[i]
        nxt = -(points[i - 1] * (eps[i - 1] * eps[i])) - points[i] * (eps[i] * a)
        if not is_primitive(nxt):
            return None
        points.append(nxt)

    i = k - 2
    prev, last = points[i - 1], points[i]
    c0 = det2(prev, v1) * eps[i - 1] * eps[i]
    c1 = det2(last, v1) * eps[i]
    # det(v_k, v_1) = -c0 - a*c1 must equal eps_k * r.
    for sign in (eps[-1], -eps[-1]):
        target = -c0 - sign * r
        if c1 == 0:
            if target != 0:
                continue
            a = draws[i]
        else:
            a, rem = divmod(target, c1)
            if rem:
                continue
        candidate = -(prev * (eps[i - 1] * eps[i])) - last * (eps[i] * a)
        if is_primitive(candidate):
            return [*points, candidate]
    return None


def random_sequence(
    r: int, k: int, seed: int, *, max_retries: int = MAX_GENERATOR_RETRIES
) -> RModularSequence:
    """Deterministic pseudo-random closed r-modular sequence of length k."""
    if r < 1 or k < 2:
        raise InvalidParameters(f"random_sequence needs r >= 1 and k >= 2, got r={r}, k={k}")
    if r % 2 == 0 and k % 2 == 1:
        # Even r forces every a_i even, so 12 | sum(a) + 3 sum(eps) needs k even.
        raise InvalidParameters(f"No closed {r}-modular loop has odd length {k}")
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_retries + 1):
        points = _try_close(r, k, rng)
        if points is not None:
            logger.debug("closed r=%d k=%d loop after %d attempts", r, k, attempt)
            return build_sequence(points)
    raise GenerationExhausted(r, k, max_retries)
