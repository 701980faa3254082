"""Кольцо Q(R) в R[u, u^-1] с отображениями p, s и вложением eta."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from algebra.errors import SpecValidationError
from algebra.maps import ring_map_kernel
from algebra.polynomials import WeightSystem
from algebra.rings import GradedRing, RingMap, laurent_power, laurent_ring
from algebra.verdict import Verdict

logger = logging.getLogger(__name__)

U = "U"


def p_name(i: int) -> str:
    return f"P{i + 1}"


def s_name(i: int) -> str:
    return f"S{i + 1}"


def free_ring(weights, names=None, name: str = "") -> GradedRing:
    """k[x1..xn] с целыми весами"""
    weights = WeightSystem.of(weights)
    names = names or [f"x{i + 1}" for i in range(len(weights))]
    return GradedRing(names, weights, name=name)


def scalar_weights(ring: GradedRing) -> tuple:
    return ring.weights.scalar()


def base_laurent(ring: GradedRing) -> GradedRing:
    """R[u, u^-1], Z^2: x -> (deg x, 0), u -> (-1, 1)"""
    return laurent_ring(ring, ["u"], [(-1, 1)], base_weight=lambda w: (w[0], 0),
                        name=f"{ring.name}[u,u^-1]")


@dataclass
class QPresentation:
    base: GradedRing
    q: GradedRing
    p: RingMap
    s: RingMap
    eta: RingMap
    laurent: GradedRing

    @property
    def degrees(self) -> tuple:
        return scalar_weights(self.base)

    def describe(self) -> dict:
        return {
            "q": self.q.describe(),
            "p": self.p.describe(),
            "s": self.s.describe(),
            "eta": self.eta.describe(),
        }


def _generators(degrees) -> tuple:
    """Имена и Z^2-веса образующих: U, P_i при d_i >= 0, S_j при d_j < 0"""
    names, weights = [U], [(-1, 1)]
    for i, d in enumerate(degrees):
        if d >= 0:
            names.append(p_name(i))
            weights.append((d, 0))
        else:
            names.append(s_name(i))
            weights.append((0, d))
    return names, weights


def _p_images(q: GradedRing, degrees) -> list:
    images = []
    for i, d in enumerate(degrees):
        if d >= 0:
            images.append(q.gen(p_name(i)))
        else:
            images.append(q.gen(s_name(i)) * q.gen(U) ** (-d))
    return images


def _s_images(q: GradedRing, degrees) -> list:
    images = []
    for i, d in enumerate(degrees):
        if d >= 0:
            images.append(q.gen(p_name(i)) * q.gen(U) ** d)
        else:
            images.append(q.gen(s_name(i)))
    return images


def _eta_images(base: GradedRing, laurent: GradedRing, degrees) -> list:
    images = [laurent.gen("u")]
    for i, d in enumerate(degrees):
        x = laurent.gen(base.names[i])
        images.append(x if d >= 0 else x * laurent_power(laurent, "u", d))
    return images


def _assemble(ring: GradedRing, relations) -> QPresentation:
    degrees = scalar_weights(ring)
    names, weights = _generators(degrees)
    q = GradedRing(names, weights, relations, name=f"Q({ring.name})" if ring.name else "Q")
    laurent = base_laurent(ring)
    p = RingMap(ring, q, _p_images(q, degrees), name="p")
    s = RingMap(ring, q, _s_images(q, degrees), name="s")
    eta = RingMap(q, laurent, _eta_images(ring, laurent, degrees), name="eta")
    return QPresentation(ring, q, p, s, eta, laurent)


def q_of_free(ring) -> QPresentation:
    """Замкнутая форма Q = k[U, P_i (d_i >= 0), S_j (d_j < 0)] для свободного кольца"""
    if isinstance(ring, (WeightSystem, list, tuple)):
        ring = free_ring(ring)
    if ring.relations:
        raise SpecValidationError("q_of_free needs a free ring; use q_present for presented rings")
    return _assemble(ring, ())


def q_present(ring: GradedRing) -> QPresentation:
    """Q(R) как ядро k[U, P, S] -> R[u, u^-1]"""
    if ring.weights.dim != 1:
        raise SpecValidationError(f"Q(R) needs Z-weights, got dimension {ring.weights.dim}")
    free = _assemble(ring, ())
    kernel = ring_map_kernel(RingMap(free.q, free.laurent, free.eta.images, name="eta"))
    qp = _assemble(ring, kernel.groebner_basis())
    logger.info(f"Q({ring.name or 'R'}): {qp.q.ngens} образующих, {len(qp.q.relations)} соотношений")
    return qp


def check_q_invariants(qp: QPresentation) -> Verdict:
    """eta∘p = pi, eta∘s = sigma, eta инъективно, степени образов"""
    degrees = qp.degrees
    laurent = qp.laurent
    bad_p, bad_s = [], []
    for i, d in enumerate(degrees):
        x = laurent.gen(qp.base.names[i])
        if not laurent.equal(qp.eta(qp.p.images[i]), x):
            bad_p.append(qp.base.names[i])
        if not laurent.equal(qp.eta(qp.s.images[i]), x * laurent_power(laurent, "u", d)):
            bad_s.append(qp.base.names[i])
    kernel = ring_map_kernel(qp.eta)
    leaked = [qp.q.format(g) for g in kernel.groebner_basis() if not qp.q.ideal.contains(g)]
    checks = {
        "eta_p_is_pi": Verdict(not bad_p, "eta(p(x)) = x", bad_p),
        "eta_s_is_sigma": Verdict(not bad_s, "eta(s(x)) = x*u^deg(x)", bad_s),
        "eta_injective": Verdict(not leaked, "kernel of eta is zero", leaked),
        "p_degrees": qp.p.is_graded(lambda d: (d[0], 0)),
        "s_degrees": qp.s.is_graded(lambda d: (0, d[0])),
        "u_degree": qp.q.weight(U) == (-1, 1),
    }
    return Verdict.all_of(checks, "Q presentation is consistent")


def q_functor(f: RingMap, source: QPresentation, target: QPresentation) -> RingMap:
    """Q(f): Q(T) -> Q(R) для градуированного f: T -> R"""
    images = []
    degrees = source.degrees
    for name in source.q.names:
        if name == U:
            images.append(target.q.gen(U))
            continue
        i = int(name[1:]) - 1
        value = f.images[i]
        images.append(target.p(value) if degrees[i] >= 0 else target.s(value))
    return RingMap(source.q, target.q, images, name=f"Q({f.name})")
