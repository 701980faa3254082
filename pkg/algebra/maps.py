"""Ядра, прообразы и образы гомоморфизмов через граф и исключение."""
from __future__ import annotations

import logging
from typing import Iterable, Sequence

from algebra.groebner import Ideal, elimination_ideal
from algebra.polynomials import PolynomialRing, block_order, transport
from algebra.rings import GradedRing, RingMap
from algebra.verdict import Verdict

logger = logging.getLogger(__name__)

TARGET_SUFFIX = "#t"
TAG_SUFFIX = "#s"


def _graph_ideal(f: RingMap, extra: Iterable = ()) -> Ideal:
    """Идеал графа в k[t, x]: соотношения цели, источника и x_i - f(x_i)(t)"""
    target_names = [name + TARGET_SUFFIX for name in f.target.names]
    ring = PolynomialRing(target_names + list(f.source.names))
    positions = list(range(len(target_names)))

    def from_target(p):
        return transport(f.target.element(p), ring, positions)

    generators = [from_target(r) for r in f.target.relations]
    generators += [from_target(g) for g in extra]
    generators += [ring.convert(r, f.source.poly_ring) for r in f.source.relations]
    for name, image in zip(f.source.names, f.images):
        generators.append(ring.gen(name) - from_target(image))
    return Ideal(ring, generators)


def _to_source(ideal: Ideal, f: RingMap) -> Ideal:
    source = f.source.poly_ring
    return Ideal(source, [source.convert(g, ideal.ring) for g in ideal.groebner_basis()])


def ring_map_kernel(f: RingMap) -> Ideal:
    """ker f как идеал кольца многочленов источника (содержит его соотношения)"""
    cached = getattr(f, "_kernel", None)
    if cached is not None:
        return cached
    kernel = _to_source(elimination_ideal(_graph_ideal(f), f.source.names), f)
    logger.debug(f"ядро {f.name}: {len(kernel.groebner_basis())} образующих")
    f._kernel = kernel
    return kernel


def ideal_preimage(f: RingMap, generators: Iterable) -> Ideal:
    """f^{-1}(J) для идеала J цели, заданного образующими"""
    if isinstance(generators, Ideal):
        generators = generators.generators
    return _to_source(elimination_ideal(_graph_ideal(f, generators), f.source.names), f)


class ImageAlgebra:
    """k-подалгебра кольца ambient, порождённая gens.

    Теги T_j - g_j в блочном порядке с переменными ambient впереди;
    f лежит в подалгебре тогда и только тогда, когда нормальная форма
    зависит только от тегов.
    """

    def __init__(self, ambient: GradedRing, generators: Sequence, tag_names: Sequence[str] | None = None):
        self.ambient = ambient
        tag_names = list(tag_names or [f"T{j + 1}" for j in range(len(generators))])
        self.tag_ring = PolynomialRing(tag_names)
        tags = [name + TAG_SUFFIX for name in tag_names]
        n = ambient.ngens
        self.work = PolynomialRing(list(ambient.names) + tags, block_order(n, len(tags)))
        relations = [self.work.convert(r, ambient.poly_ring) for r in ambient.relations]
        for tag, g in zip(tags, generators):
            image = self.work.convert(ambient.element(g), ambient.poly_ring)
            relations.append(self.work.gen(tag) - image)
        self.ideal = Ideal(self.work, relations)
        self._positions = [None] * n + list(range(len(tags)))

    def represent(self, f):
        """Многочлен от тегов, равный f, или None"""
        lifted = self.work.convert(self.ambient.element(f), self.ambient.poly_ring)
        remainder = self.ideal.normal_form(lifted)
        n = self.ambient.ngens
        if any(any(m[:n]) for m in remainder.itermonoms()):
            return None
        return transport(remainder, self.tag_ring, self._positions)


def subalgebra_membership(f, generators: Sequence, ambient: GradedRing, tag_names=None):
    return ImageAlgebra(ambient, generators, tag_names).represent(f)


def map_is_surjective(f: RingMap) -> Verdict:
    algebra = ImageAlgebra(f.target, f.images, f.source.names)
    missing = []
    preimages = {}
    for name, gen in zip(f.target.names, f.target.gens):
        representation = algebra.represent(gen)
        if representation is None:
            missing.append(name)
        else:
            preimages[name] = f.source.format(f.source.poly_ring.convert(representation, algebra.tag_ring))
    if missing:
        return Verdict(False, f"generators {missing} are not in the image of {f.name}", missing,
                       {"preimages": preimages})
    return Verdict(True, f"{f.name} is surjective", checks={"preimages": preimages})


def map_is_injective(f: RingMap) -> Verdict:
    kernel = ring_map_kernel(f)
    witnesses = [g for g in kernel.groebner_basis() if not f.source.ideal.contains(g)]
    if witnesses:
        return Verdict(False, f"{f.name} has a nonzero kernel",
                       [f.source.format(g) for g in witnesses])
    return Verdict(True, f"kernel of {f.name} is zero")


def is_isomorphism(f: RingMap) -> Verdict:
    checks = {"injective": map_is_injective(f), "surjective": map_is_surjective(f)}
    detail = f"{f.name} is an isomorphism" if all(checks.values()) else f"{f.name} is not an isomorphism"
    return Verdict.all_of(checks, detail)
