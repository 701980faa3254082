"""Q ⊗_{s,p} Q с Z^3-градуировкой и отображение rho: (Q ⊗ Q)_0 -> Q."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.errors import ConsistencyError
from algebra.maps import ImageAlgebra, map_is_surjective, ring_map_kernel
from algebra.polynomials import PolynomialRing, transport
from algebra.rings import GradedRing, RingMap, laurent_power, laurent_ring, prune_presentation
from algebra.verdict import Verdict
from equivariant.q_construction import QPresentation
from homological.degree_zero import DegreeZeroSubring, degree_zero_part

logger = logging.getLogger(__name__)

MIDDLE = 1


def right_name(name: str) -> str:
    return name + "'"


def is_right(name: str) -> bool:
    return name.endswith("'")


def double_laurent(base: GradedRing) -> GradedRing:
    """R[u^±, v^±], Z^3: x -> (d,0,0), u -> (-1,1,0), v -> (0,-1,1)"""
    return laurent_ring(base, ["u", "v"], [(-1, 1, 0), (0, -1, 1)],
                        base_weight=lambda w: (w[0], 0, 0), name="R[u^±,v^±]")


@dataclass
class TensorSquare:
    qp: QPresentation
    ring: GradedRing         # после упрощения
    raw: GradedRing          # до упрощения
    substitution: dict       # имя raw -> многочлен ring
    laurent: GradedRing      # R[u^±, v^±]
    phi: RingMap             # ring -> laurent
    left: RingMap            # Q -> ring
    right: RingMap           # Q -> ring

    def describe(self) -> dict:
        return {"ring": self.ring.describe(), "phi": self.phi.describe()}


def _right_image(qp: QPresentation, laurent: GradedRing, eta_image):
    """r * t^k справа -> r * u^{deg r} * v^k"""
    base = qp.base
    n = base.ngens
    names = qp.laurent.names
    u_index, u_inv_index = names.index("u"), names.index("u_inv")
    degrees = qp.degrees
    result = laurent.zero
    for monom, coeff in eta_image.items():
        k = monom[u_index] - monom[u_inv_index]
        r_degree = sum(e * d for e, d in zip(monom[:n], degrees))
        term = laurent.poly_ring.monomial(tuple(monom[:n]) + (0,) * 4, coeff)
        result += term * laurent_power(laurent, "u", r_degree) * laurent_power(laurent, "v", k)
    return result


def tensor_square(qp: QPresentation) -> TensorSquare:
    q = qp.q
    left_names = list(q.names)
    right_names = [right_name(n) for n in q.names]
    names = left_names + right_names
    poly = PolynomialRing(names)
    left_pos = list(range(q.ngens))
    right_pos = list(range(q.ngens, 2 * q.ngens))
    relations = [transport(r, poly, left_pos) for r in q.relations]
    relations += [transport(r, poly, right_pos) for r in q.relations]
    for s_image, p_image in zip(qp.s.images, qp.p.images):
        relations.append(transport(s_image, poly, left_pos) - transport(p_image, poly, right_pos))
    weights = [(a, b, 0) for a, b in q.weights.weights] + [(0, a, b) for a, b in q.weights.weights]
    raw = GradedRing(names, weights, relations, name="Q⊗Q")
    ring, substitution = prune_presentation(raw)

    laurent = double_laurent(qp.base)
    raw_images = {}
    for name, image in zip(q.names, qp.eta.images):
        raw_images[name] = laurent.poly_ring.convert(image, qp.laurent.poly_ring)
        raw_images[right_name(name)] = _right_image(qp, laurent, image)
    phi = RingMap(ring, laurent, [raw_images[n] for n in ring.names], name="phi")
    left = RingMap(q, ring, [substitution[n] for n in left_names], name="left")
    right = RingMap(q, ring, [substitution[n] for n in right_names], name="right")
    logger.info(f"Q⊗Q: {raw.ngens} -> {ring.ngens} образующих, {len(ring.relations)} соотношений")
    return TensorSquare(qp, ring, raw, substitution, laurent, phi, left, right)


def collapse(qp: QPresentation, laurent: GradedRing) -> RingMap:
    """u -> 1, v -> t: R[u^±, v^±] -> R[t^±]"""
    target = qp.laurent
    images = []
    for name in laurent.names:
        if name in ("u", "u_inv"):
            images.append(target.one)
        elif name == "v":
            images.append(target.gen("u"))
        elif name == "v_inv":
            images.append(target.gen("u_inv"))
        else:
            images.append(target.gen(name))
    return RingMap(laurent, target, images, name="collapse")


@dataclass
class RhoMap:
    tensor: TensorSquare
    zero: DegreeZeroSubring
    map: RingMap                 # zero.ring -> Q
    second: RingMap              # та же карта через (eta ⊗ 1)_0
    factorizations: Verdict = None
    details: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {
            "source": self.zero.describe(),
            "images": self.map.describe(),
            "factorizations_agree": self.factorizations.holds if self.factorizations else None,
        }


def _second_route(qp: QPresentation, tensor: TensorSquare, monomial_image):
    """(eta ⊗ 1)_0: левая часть r*u^j -> p(r), правая часть как элемент Q"""
    ring = tensor.ring
    q = qp.q
    n = qp.base.ngens
    total = q.zero
    for monom, coeff in monomial_image.items():
        left_exps = [0] * q.ngens
        right_value = q.poly_ring.constant(coeff)
        for name, e in zip(ring.names, monom):
            if not e:
                continue
            if is_right(name):
                right_value *= q.gen(name[:-1]) ** e
            else:
                left_exps[q.poly_ring.index(name)] += e
        left = q.poly_ring.monomial(left_exps)
        eta_left = qp.eta(left)
        for emonom, ecoeff in eta_left.items():
            r = qp.base.poly_ring.monomial(emonom[:n], ecoeff)
            total += qp.p(r) * right_value
    return total


def rho_map(qp: QPresentation, cap: int | None = None) -> RhoMap:
    tensor = tensor_square(qp)
    zero = degree_zero_part(tensor.ring, MIDDLE, cap)
    down = collapse(qp, tensor.laurent)
    algebra = ImageAlgebra(qp.laurent, qp.eta.images, qp.q.names)
    images, second = [], []
    for name, inclusion_image in zip(zero.ring.names, zero.inclusion.images):
        value = down(tensor.phi(inclusion_image))
        representation = algebra.represent(value)
        if representation is None:
            raise ConsistencyError(
                f"rho image {qp.laurent.format(value)} of {tensor.ring.format(inclusion_image)} is not in Q")
        images.append(qp.q.poly_ring.convert(representation, algebra.tag_ring))
        second.append(_second_route(qp, tensor, inclusion_image))
    rho = RingMap(zero.ring, qp.q, images, name="rho")
    second_map = RingMap(zero.ring, qp.q, second, name="rho'")
    mismatched = [n for n, a, b in zip(zero.ring.names, images, second) if not qp.q.equal(a, b)]
    factorizations = Verdict(not mismatched, "(1⊗eta)_0 and (eta⊗1)_0 agree", mismatched)
    return RhoMap(tensor, zero, rho, second_map, factorizations)


def rho_kernel_witnesses(rho: RhoMap) -> list:
    """Образующие ядра rho, ненулевые в (Q ⊗ Q)_0, с образами в R[u^±, v^±]"""
    kernel = ring_map_kernel(rho.map)
    source = rho.zero.ring
    tensor = rho.tensor
    witnesses = []
    for g in kernel.groebner_basis():
        if source.ideal.contains(g):
            continue
        element = rho.zero.inclusion(g)
        image = tensor.phi(element)
        witnesses.append({
            "element": tensor.ring.format(element),
            "image": tensor.laurent.format(image),
            "reduced": tensor.laurent.format(tensor.laurent.reduce(image)),
        })
    return witnesses


def rho_iso_check(rho: RhoMap) -> Verdict:
    witnesses = rho_kernel_witnesses(rho)
    injective = Verdict(not witnesses, "kernel of rho is zero" if not witnesses else "rho has a kernel",
                        [w["element"] for w in witnesses], {"kernel": witnesses})
    surjective = map_is_surjective(rho.map)
    checks = {"injective": injective, "surjective": surjective, "factorizations": rho.factorizations}
    holds = injective.holds and surjective.holds
    return Verdict(holds, "rho is an isomorphism" if holds else "rho is not an isomorphism",
                   injective.witnesses + list(surjective.witnesses), checks)
