"""Полуортогональное разложение для узла R = k[x,y]/(xy): Phi_{Q_der} на R(i), R/x(i), R/y(i).

Phi(R/J(i)) = (Q/(d eps, p(J)))_{(i,*)} как R-модуль через s. Идемпотентность
считается через ядро свёртки (Q_der ⊗ Q_der)_0: M входит слева через p,
действие R справа через s.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from algebra.errors import ConsistencyError
from algebra.groebner import standard_monomials
from algebra.maps import ImageAlgebra
from algebra.rings import GradedRing
from algebra.verdict import Verdict
from config import config
from derived.q_der import QDer, convolution_algebra, q_der

logger = logging.getLogger(__name__)

NODE_QUOTIENTS = {"R": [], "R/x": ["x"], "R/y": ["y"]}


def node_ring() -> GradedRing:
    return GradedRing(["x", "y"], [1, -1], ["x*y"], name="node")


@dataclass
class KernelModel:
    """Кольцо ядра с Z^2-весами (срез, R-степень), p и s на образующих R"""

    ring: GradedRing
    p: dict
    s: dict
    relations: list
    label: str = ""


def _degree_cap(i: int, d: int) -> int:
    return 3 * (abs(i) + abs(d)) + 3


@dataclass
class PhiSlice:
    dims: dict = field(default_factory=dict)        # d -> dim
    generators: list = field(default_factory=list)  # степени минимальных образующих

    def describe(self) -> dict:
        return {"dims": {str(d): v for d, v in sorted(self.dims.items())},
                "generator_degrees": self.generators}

    @property
    def is_zero(self) -> bool:
        return not any(self.dims.values())


def _coordinates(f, basis: list, ring: GradedRing) -> list:
    index = {m: k for k, m in enumerate(basis)}
    row = [QQ(0)] * len(basis)
    for monom, coeff in f.items():
        if monom not in index:
            raise ConsistencyError(f"normal form {ring.format(f)} leaves the monomial cap")
        row[index[monom]] += coeff
    return row


def phi_slice(model: KernelModel, base: GradedRing, quotient: list, i: int, degrees) -> PhiSlice:
    ring = model.ring.quotient(list(model.relations) + [model.p[name] for name in quotient])
    result = PhiSlice()
    degrees = list(degrees)
    bases = {}
    # базисы и на соседних степенях: x и y имеют степени 1 и -1
    for d in range(min(degrees) - 1, max(degrees) + 2):
        bases[d] = standard_monomials(ring.ideal, ring.weights, (i, d), _degree_cap(i, d))
    for d in degrees:
        result.dims[d] = len(bases[d])
    for d in degrees:
        rows = []
        for name in base.names:
            step = base.weight(name)[0]
            source = d - step
            if source not in bases:
                continue
            for monom in bases[source]:
                image = ring.reduce(ring.element(model.s[name]) * ring.poly_ring.monomial(monom))
                if image:
                    rows.append(_coordinates(image, bases[d], ring))
        rank = DomainMatrix(rows, (len(rows), len(bases[d])), QQ).rank() if rows and bases[d] else 0
        result.generators.extend([d] * (result.dims[d] - rank))
    return result


def module_slice(base: GradedRing, quotient: list, i: int, degrees) -> PhiSlice:
    """R/J(i) по степеням: (R/J)_{i+d}; образующая в степени -i"""
    ring = base.quotient([base.gen(name) for name in quotient])
    result = PhiSlice()
    for d in degrees:
        result.dims[d] = len(standard_monomials(ring.ideal, ring.weights, (i + d,), abs(i + d) + 1))
    if -i in result.dims:
        result.generators = [-i]
    return result


def base_model(qd: QDer) -> KernelModel:
    base = qd.ring
    p = {name: qd.qp.p(qd.qp.base.gen(name)) for name in base.names}
    s = {name: qd.qp.s(qd.qp.base.gen(name)) for name in base.names}
    return KernelModel(qd.algebra.base, p, s, list(qd.algebra.differential), "Q_der")


def convolution_model(qd: QDer, cap: int | None = None) -> KernelModel:
    convolution, to_q, rho = convolution_algebra(qd, cap)
    tensor, zero = rho.tensor, rho.zero
    algebra = ImageAlgebra(tensor.ring, zero.inclusion.images, zero.ring.names)

    def lift(value):
        representation = algebra.represent(value)
        return zero.ring.poly_ring.convert(representation, algebra.tag_ring)

    base = qd.qp.base
    p = {name: lift(tensor.left(qd.qp.p(base.gen(name)))) for name in base.names}
    s = {name: lift(tensor.right(qd.qp.s(base.gen(name)))) for name in base.names}
    return KernelModel(zero.ring, p, s, list(convolution.differential), "(Q_der⊗Q_der)_0")


@dataclass
class SODReport:
    entries: dict = field(default_factory=dict)  # (label, i) -> dict

    def entry(self, label: str, i: int) -> dict:
        return self.entries[(label, i)]

    @property
    def idempotent(self) -> bool:
        return all(e["idempotent"].holds for e in self.entries.values())

    def describe(self) -> dict:
        result = {}
        for (label, i), entry in sorted(self.entries.items()):
            result[f"{label}({i})"] = {
                "phi": entry["phi"].describe(),
                "module": entry["module"].describe(),
                "equals_module": entry["equals_module"],
                "vanishes": entry["phi"].is_zero,
                "idempotent": entry["idempotent"].to_dict(),
                "perfect_generator": entry.get("perfect_generator"),
            }
        return {"entries": result, "idempotent": self.idempotent}


def sod_check_node(bound: int | None = None, twist_range: tuple = (-2, 2), window: tuple = (-4, 4),
                   idempotence_window: tuple | None = None, cap: int | None = None) -> SODReport:
    bound = config.HOMOLOGY_BOUND if bound is None else bound
    ring = node_ring()
    qd = q_der(ring, bound)
    model = base_model(qd)
    kernel = convolution_model(qd, cap)
    degrees = list(range(window[0], window[1] + 1))
    idempotence_window = idempotence_window or window
    small = list(range(idempotence_window[0], idempotence_window[1] + 1))
    report = SODReport()
    for label, quotient in NODE_QUOTIENTS.items():
        for i in range(twist_range[0], twist_range[1] + 1):
            phi = phi_slice(model, ring, quotient, i, degrees)
            module = module_slice(ring, quotient, i, degrees)
            equals = phi.dims == module.dims and phi.generators == module.generators
            composed = phi_slice(kernel, ring, quotient, i, small)
            restricted = PhiSlice({d: phi.dims[d] for d in small},
                                  [d for d in phi.generators if d in small])
            same = composed.dims == restricted.dims and composed.generators == restricted.generators
            entry = {
                "phi": phi,
                "module": module,
                "equals_module": equals,
                "idempotent": Verdict(same, f"Phi∘Phi = Phi on {label}({i})",
                                      [] if same else [composed.describe()]),
            }
            if label == "R":
                entry["perfect_generator"] = equals
            report.entries[(label, i)] = entry
            logger.debug(f"Phi({label}({i})): {phi.dims}, образующие {phi.generators}")
    logger.info(f"SOD узла: идемпотентность {report.idempotent}")
    return report
