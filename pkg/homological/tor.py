"""Tor^R_i(Q_s, Q_p) через резольвенту Q над R ⊗ R ⊗ k[w]."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.maps import ring_map_kernel
from algebra.modules import SubmodulePresentation, free_resolution, homology
from algebra.polynomials import PolynomialRing, transport
from algebra.rings import GradedRing, RingMap
from equivariant.q_construction import QPresentation
from homological.koszul import koszul_complex, solves_out

logger = logging.getLogger(__name__)


def _copy_names(prefix: str, n: int) -> list:
    return [f"{prefix}{i + 1}" for i in range(n)]


def bimodule_base(qp: QPresentation) -> tuple:
    """B = R^(p) ⊗ R^(s) ⊗ k[w] и отображение B -> Q"""
    base = qp.base
    n = base.ngens
    degrees = qp.degrees
    names = _copy_names("X", n) + _copy_names("Y", n) + ["w"]
    poly = PolynomialRing(names)
    relations = [transport(r, poly, range(n)) for r in base.relations]
    relations += [transport(r, poly, range(n, 2 * n)) for r in base.relations]
    weights = [(d, 0) for d in degrees] + [(0, d) for d in degrees] + [(-1, 1)]
    ring = GradedRing(names, weights, relations, name="R⊗R⊗k[w]")
    images = list(qp.p.images) + list(qp.s.images) + [qp.q.gen("U")]
    return ring, RingMap(ring, qp.q, images, name="B->Q")


def tensor_base(qp: QPresentation) -> tuple:
    """C = Q ⊗ R^(X) ⊗ k[v] и замена базы B -> C: Y_i -> p(x_i), X_i -> X_i, w -> v"""
    base = qp.base
    n = base.ngens
    degrees = qp.degrees
    names = list(qp.q.names) + _copy_names("X", n) + ["v"]
    poly = PolynomialRing(names)
    relations = [poly.convert(r, qp.q.poly_ring) for r in qp.q.relations]
    relations += [transport(r, poly, range(qp.q.ngens, qp.q.ngens + n)) for r in base.relations]
    weights = list(qp.q.weights.weights) + [(d, 0) for d in degrees] + [(-1, 1)]
    ring = GradedRing(names, weights, relations, name="Q⊗R⊗k[v]")
    return ring


def koszul_sequence(qp: QPresentation, b_ring: GradedRing) -> list:
    """Образующие ядра B -> Q для свободного R: Y_i - X_i w^{d_i}, X_j - Y_j w^{-d_j}"""
    w = b_ring.gen("w")
    sequence = []
    for i, d in enumerate(qp.degrees):
        x, y = b_ring.gen(f"X{i + 1}"), b_ring.gen(f"Y{i + 1}")
        sequence.append(y - x * w ** d if d >= 0 else x - y * w ** (-d))
    return sequence


@dataclass
class TorTable:
    bound: int
    entries: dict = field(default_factory=dict)  # i -> HomologyModule
    certified: bool = False
    certificate: list = field(default_factory=list)
    resolution_ranks: dict = field(default_factory=dict)

    def vanishes(self, i: int) -> bool:
        if self.certified:
            return True
        entry = self.entries.get(i)
        return entry is not None and entry.is_zero

    @property
    def all_vanish(self) -> bool:
        return all(self.vanishes(i) for i in range(1, self.bound + 1))

    def describe(self) -> dict:
        table = {}
        for i in range(1, self.bound + 1):
            entry = self.entries.get(i)
            row = {"vanishes": self.vanishes(i), "certified": self.certified}
            if entry is not None:
                row.update(entry.describe())
            table[str(i)] = row
        return {
            "table": table,
            "certified_all_degrees": self.certified,
            "certificate": self.certificate,
            "resolution_ranks": {str(k): v for k, v in sorted(self.resolution_ranks.items())},
        }


def tor_bimodule(qp: QPresentation, bound: int) -> TorTable:
    b_ring, to_q = bimodule_base(qp)
    c_ring = tensor_base(qp)
    n = qp.base.ngens
    q_count = qp.q.ngens
    change = RingMap(b_ring, c_ring,
                     [c_ring.gen(f"X{i + 1}") for i in range(n)]
                     + [c_ring.element(image) for image in qp.p.images]
                     + [c_ring.gen("v")], name="B->C")
    table = TorTable(bound)
    if not qp.base.relations:
        # свободное R: Q полное пересечение над B, резольвента Кошуля
        sequence = koszul_sequence(qp, b_ring)
        images = [change(f) for f in sequence]
        solved = solves_out(c_ring, images)
        table.certificate = [
            {"element": c_ring.format(f), "solves": var} for f, var in zip(images, solved)]
        table.certified = all(solved)
        resolution = koszul_complex(b_ring, sequence, name="koszul(B)")
        table.resolution_ranks = dict(resolution.ranks)
        if table.certified:
            logger.info(f"Tor: сертификат Кошуля для {n} элементов")
            return table
    else:
        kernel = ring_map_kernel(to_q)
        relations = [(g,) for g in kernel.groebner_basis() if not b_ring.ideal.contains(g)]
        module = SubmodulePresentation(b_ring, 1, relations)
        resolution = free_resolution(module, bound + 1)
        table.resolution_ranks = dict(resolution.ranks)
    tensored = resolution.base_change(change, name="resolution⊗Q")
    for i in range(1, bound + 1):
        table.entries[i] = homology(tensored, i)
    logger.info(f"Tor до {bound}: {[table.vanishes(i) for i in range(1, bound + 1)]}, Q имеет {q_count} образующих")
    return table
