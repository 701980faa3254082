"""Проверки свойств Q: локализация, присоединение переменной, кодекартов квадрат."""
from __future__ import annotations

import logging

from algebra.errors import SpecValidationError
from algebra.maps import is_isomorphism
from algebra.polynomials import PolynomialRing, transport
from algebra.rings import GradedRing, RingMap, laurent_power
from algebra.verdict import Verdict
from equivariant.q_construction import U, p_name, q_functor, q_present, s_name

logger = logging.getLogger(__name__)

LOCAL_TAG = "T_inv"


def _homogeneous_degree(ring: GradedRing, r) -> int:
    r = ring.element(r)
    if not r:
        raise SpecValidationError("cannot localize at zero")
    degree = ring.degree(r)
    if degree is None:
        raise SpecValidationError(f"{ring.format(r)} is not homogeneous")
    return degree[0]


def eta_localization_check(ring: GradedRing, r) -> Verdict:
    """Q после обращения s(r) или p(r) против R_r[u, u^-1] или Q(R_r)"""
    r = ring.element(r)
    d = _homogeneous_degree(ring, r)
    if r.is_ground:
        return Verdict(True, "r is a unit, both sides coincide")
    qp = q_present(ring)
    if d == 0:
        # тег локализации получает то же имя, что и новая образующая Q(R_r)
        local = ring.localize(r, tag="r_inv")
        target = q_present(local).q
        tag = p_name(ring.ngens)
        source = qp.q.localize(qp.p(r), tag=tag)
        iso = RingMap(source, target, [target.gen(name) for name in source.names], name="Q(R)_r -> Q(R_r)")
        verdict = is_isomorphism(iso)
        verdict.detail = f"degree 0: Q(R) ⊗ R_r ≅ Q(R_r) {'holds' if verdict else 'fails'}"
        return verdict
    laurent = qp.laurent.localize(qp.laurent.element(r), tag="r_inv")
    u_power = laurent_power(laurent, "u", -d)
    if d > 0:
        source = qp.q.localize(qp.s(r), tag=LOCAL_TAG)
        tag_image = laurent.gen("r_inv") * u_power
        side = "s"
    else:
        source = qp.q.localize(qp.p(r), tag=LOCAL_TAG)
        tag_image = laurent.gen("r_inv")
        side = "p"
    images = [laurent.element(image) for image in qp.eta.images] + [tag_image]
    eta_local = RingMap(source, laurent, images, name=f"eta[{side}(r)^-1]")
    verdict = is_isomorphism(eta_local)
    verdict.detail = f"degree {d}: R_r ⊗_{side} Q ≅ R_r[u,u^-1] {'holds' if verdict else 'fails'}"
    if verdict:
        verdict.witnesses = [f"u^-1 = {source.format(_u_inverse(source, qp, r, d))}"]
    return verdict


def _u_inverse(source: GradedRing, qp, r, d: int):
    """u^-1 через обращённый элемент"""
    tag = source.gen(LOCAL_TAG)
    u = source.gen(U)
    if d > 0:
        return tag * source.element(qp.p(r)) * u ** (d - 1)
    return tag * source.element(qp.s(r)) * u ** (-d - 1)


def _fresh(names, base: str) -> str:
    k = len(names) + 1
    while f"{base}{k}" in names:
        k += 1
    return f"{base}{k}"


def q_polynomial_extension_check(ring: GradedRing, a: int) -> Verdict:
    """Q(R)[y] ≅ Q(R[x]) при deg x = a"""
    var = _fresh(ring.names, "x")
    bigger = ring.extend([var], [(a,)], name=f"{ring.name}[{var}]")
    q_small = q_present(ring)
    q_big = q_present(bigger).q
    y_weight = (a, 0) if a >= 0 else (0, a)
    source = q_small.q.extend(["Y"], [y_weight], name="Q(R)[Y]")
    index = ring.ngens
    y_image = q_big.gen(p_name(index)) if a >= 0 else q_big.gen(s_name(index))
    images = [q_big.gen(name) for name in q_small.q.names] + [y_image]
    verdict = is_isomorphism(RingMap(source, q_big, images, name="Q(R)[Y] -> Q(R[x])"))
    verdict.checks["degree"] = a
    return verdict


def _check_graded(f: RingMap):
    if not f.is_graded():
        raise SpecValidationError(f"map {f.name} is not graded")


def _pushout_ring(f: RingMap, g: RingMap) -> tuple:
    """R ⊗_T S: переменные R, затем S с штрихом"""
    left, right = f.target, g.target
    right_names = [n + "'" for n in right.names]
    names = list(left.names) + right_names
    poly = PolynomialRing(names)
    right_positions = list(range(left.ngens, len(names)))

    def from_left(x):
        return poly.convert(left.element(x), left.poly_ring)

    def from_right(x):
        return transport(right.element(x), poly, right_positions)

    relations = [from_left(r) for r in left.relations] + [from_right(r) for r in right.relations]
    relations += [from_left(a) - from_right(b) for a, b in zip(f.images, g.images)]
    weights = list(left.weights.weights) + list(right.weights.weights)
    return GradedRing(names, weights, relations, name="R⊗_T S"), right_names


def q_pushout_check(f: RingMap, g: RingMap) -> Verdict:
    """Q(R ⊗_T S) ≅ Q(R) ⊗_{Q(T)} Q(S)"""
    if f.source is not g.source and f.source.names != g.source.names:
        raise SpecValidationError("pushout needs maps with a common source")
    _check_graded(f)
    _check_graded(g)
    tensor, _ = _pushout_ring(f, g)
    q_t, q_r, q_s = q_present(f.source), q_present(f.target), q_present(g.target)
    q_tensor = q_present(tensor)
    qf, qg = q_functor(f, q_t, q_r), q_functor(g, q_t, q_s)

    # Q(R) ⊗_{Q(T)} Q(S): образующие Q(S) со штрихом
    right_names = [n + "'" for n in q_s.q.names]
    names = list(q_r.q.names) + right_names
    poly = PolynomialRing(names)
    right_positions = list(range(q_r.q.ngens, len(names)))
    relations = [poly.convert(r, q_r.q.poly_ring) for r in q_r.q.relations]
    relations += [transport(r, poly, right_positions) for r in q_s.q.relations]
    for a, b in zip(qf.images, qg.images):
        relations.append(poly.convert(a, q_r.q.poly_ring) - transport(b, poly, right_positions))
    weights = list(q_r.q.weights.weights) + list(q_s.q.weights.weights)
    source = GradedRing(names, weights, relations, name="Q(R)⊗Q(S)")

    # каноническое отображение в Q(R ⊗_T S)
    offset = f.target.ngens
    images = []
    for name in q_r.q.names:
        images.append(q_tensor.q.gen(name))
    for name in q_s.q.names:
        if name == U:
            images.append(q_tensor.q.gen(U))
        else:
            images.append(q_tensor.q.gen(f"{name[0]}{int(name[1:]) + offset}"))
    verdict = is_isomorphism(RingMap(source, q_tensor.q, images, name="Q(R)⊗Q(S) -> Q(R⊗S)"))
    logger.info(f"кодекартов квадрат: {verdict.holds}")
    return verdict
