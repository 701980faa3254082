"""Производное ядро Q_der(R) для полных пересечений и проверка свойства P_der."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.errors import ConsistencyError
from algebra.maps import ImageAlgebra, is_isomorphism
from algebra.rings import GradedRing, RingMap
from algebra.verdict import Verdict
from config import config
from derived.dg_algebra import DGAlgebra, DGMap, ci_cofibrant_replacement, dg_homology
from equivariant.q_construction import U, QPresentation, q_of_free, q_present
from homological.tensor import RhoMap, rho_iso_check, rho_map

logger = logging.getLogger(__name__)


def eps_name(k: int) -> str:
    return f"ε{k + 1}"


@dataclass
class QDer:
    ring: GradedRing
    cover: DGAlgebra       # S = k[x]<e>, d e = f
    qp: QPresentation      # Q свободного накрытия
    algebra: DGAlgebra     # Q_der = Q<ε>
    p: DGMap               # S -> Q_der
    s: DGMap

    @property
    def relation_weights(self) -> list:
        return [w[0] for w in self.cover.odd_weights]

    def describe(self) -> dict:
        return {
            "cover": self.cover.describe(),
            "q_der": self.algebra.describe(),
            "p": [self.algebra.format(e) for e in self.p.odd_images],
            "s": [self.algebra.format(e) for e in self.s.odd_images],
        }


def q_der(ring: GradedRing, bound: int | None = None) -> QDer:
    """ε_i = p(e_i), d ε_i = p(f_i) при deg f_i >= 0; иначе ε_i = s(e_i), d ε_i = s(f_i)"""
    cover = ci_cofibrant_replacement(ring, bound)
    qp = q_of_free(cover.base)
    q = qp.q
    names, values, weights = [], [], []
    for k, (f, w) in enumerate(zip(cover.differential, cover.odd_weights)):
        names.append(eps_name(k))
        if w[0] >= 0:
            values.append(qp.p(f))
            weights.append((w[0], 0))
        else:
            values.append(qp.s(f))
            weights.append((0, w[0]))
    algebra = DGAlgebra(q, names, values, weights, name=f"Q_der({ring.name})" if ring.name else "Q_der")
    if not algebra.check_weights():
        raise ConsistencyError(f"odd generator weights disagree with d in {algebra.name}")
    algebra.check_d_squared()

    u = q.gen(U)
    p_odd, s_odd = [], []
    for name, w in zip(names, cover.odd_weights):
        eps = algebra.odd(name)
        p_odd.append(eps if w[0] >= 0 else algebra.scale(eps, u ** (-w[0])))
        s_odd.append(algebra.scale(eps, u ** w[0]) if w[0] >= 0 else eps)
    p_map = DGMap(cover, algebra, qp.p, p_odd)
    s_map = DGMap(cover, algebra, qp.s, s_odd)
    for label, f in (("p", p_map), ("s", s_map)):
        if not f.check_compatible():
            raise ConsistencyError(f"{label}: S -> Q_der does not commute with d")
    logger.info(f"{algebra.name}: {q.ngens} чётных, {len(names)} нечётных образующих")
    return QDer(ring, cover, qp, algebra, p_map, s_map)


def h0_comparison(qd: QDer) -> Verdict:
    """H_0(Q_der) = Q/(d ε) против Q(R) из q_present (те же имена образующих)"""
    presented = q_present(qd.ring).q
    h0 = qd.algebra.base.quotient(qd.algebra.differential)
    checks = {
        "surjects": Verdict(presented.ideal.contains_ideal(h0.ideal), "H_0(Q_der) -> Q(R) is well defined",
                            h0.format_relations()),
        "equal": Verdict(presented.ideal.same_as(h0.ideal), "H_0(Q_der) = Q(R)", presented.format_relations()),
    }
    return Verdict.all_of(checks, "H_0(Q_der) against Q(R)")


@dataclass
class PropertyPderReport:
    verdict: Verdict
    table: dict = field(default_factory=dict)   # i -> {"convolution": ..., "q_der": ...}
    convolution: DGAlgebra = None
    rho: RhoMap = None

    @property
    def holds(self) -> bool:
        return self.verdict.holds

    def describe(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "homology": {str(i): row for i, row in sorted(self.table.items())},
            "convolution": self.convolution.describe() if self.convolution else {},
        }


def convolution_algebra(qd: QDer, cap: int | None = None) -> tuple:
    """(Q_der ⊗_S Q_der)_0 = (Q ⊗ Q)_0<ε> и rho на уровне dg"""
    rho = rho_map(qd.qp, cap)
    tensor, zero = rho.tensor, rho.zero
    algebra = ImageAlgebra(tensor.ring, zero.inclusion.images, zero.ring.names)
    values = []
    for k, (value, w) in enumerate(zip(qd.algebra.differential, qd.relation_weights)):
        # нечётная образующая слева при w >= 0 и справа при w < 0
        lifted = tensor.left(value) if w >= 0 else tensor.right(value)
        representation = algebra.represent(lifted)
        if representation is None:
            raise ConsistencyError(f"d of {eps_name(k)} is not in the middle-degree-zero part")
        values.append(zero.ring.poly_ring.convert(representation, algebra.tag_ring))
    names = list(qd.algebra.odd_names)
    convolution = DGAlgebra(zero.ring, names, values, name="(Q_der⊗Q_der)_0")
    convolution.check_d_squared()
    to_q = DGMap(convolution, qd.algebra, rho.map, [qd.algebra.odd(n) for n in names])
    return convolution, to_q, rho


def beta_check(ring: GradedRing, bound: int | None = None, cap: int | None = None) -> PropertyPderReport:
    bound = config.HOMOLOGY_BOUND if bound is None else bound
    qd = q_der(ring, bound)
    convolution, to_q, rho = convolution_algebra(qd, cap)

    checks = {"rho": rho_iso_check(rho), "commutes_with_d": to_q.check_compatible()}
    h0_map = RingMap(convolution.base.quotient(convolution.differential),
                     qd.algebra.base.quotient(qd.algebra.differential), rho.map.images, name="H_0(rho)")
    checks["H0"] = is_isomorphism(h0_map)

    left = dg_homology(convolution, bound)
    right = dg_homology(qd.algebra, bound)
    table = {}
    for i, (a, b) in enumerate(zip(left, right)):
        table[i] = {"convolution": a.describe(), "q_der": b.describe()}
        if i > 0:
            checks[f"H{i}"] = Verdict(a.is_zero == b.is_zero,
                                      f"H_{i} vanishing agrees on both sides",
                                      [] if a.is_zero == b.is_zero else [f"H_{i}"])
    verdict = Verdict.all_of(checks, "(Q_der ⊗ Q_der)_0 -> Q_der is a weak equivalence")
    logger.info(f"P_der для {ring.name or 'R'}: {verdict.holds}")
    return PropertyPderReport(verdict, table, convolution, rho)
