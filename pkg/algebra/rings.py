"""Конечно представленные градуированные кольца и их гомоморфизмы."""
from __future__ import annotations

import logging
from typing import Iterable, Mapping, Sequence

from sympy.polys.rings import PolyElement

from algebra.errors import ConsistencyError, InhomogeneousRelationError, SpecValidationError
from algebra.groebner import Ideal
from algebra.polynomials import (
    ANY_DEGREE,
    GREVLEX,
    MonomialOrder,
    PolynomialRing,
    WeightSystem,
    format_laurent,
    multidegree,
    substitute,
    term_degrees,
    transport,
)

logger = logging.getLogger(__name__)


class GradedRing:
    """k[x_1..x_n]/I с весами Z^d; все соотношения однородны"""

    def __init__(self, names: Sequence[str], weights, relations: Iterable = (),
                 order: MonomialOrder = GREVLEX, name: str = "", inverses: Mapping | None = None):
        self.name = name
        if not names:
            raise SpecValidationError("a ring needs at least one variable")
        self.poly_ring = PolynomialRing(names, order)
        self.names = self.poly_ring.names
        self.weights = WeightSystem.of(weights)
        if len(self.weights) != len(self.names):
            raise SpecValidationError(f"{len(self.names)} variables but {len(self.weights)} weights")
        # пары (переменная, тег обратного) для печати лорановских элементов
        self.inverses = dict(inverses or {})
        parsed = []
        for relation in relations:
            parsed.append(self.poly_ring.parse(relation) if isinstance(relation, str)
                          else self.poly_ring.convert(relation))
        for relation in parsed:
            if multidegree(relation, self.weights) is None:
                raise InhomogeneousRelationError(self.poly_ring.format(relation),
                                                 term_degrees(relation, self.weights))
        self.relations = tuple(r for r in parsed if r)
        self.ideal = Ideal(self.poly_ring, self.relations)

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"GradedRing({label}{list(self.names)} / {self.format_relations()})"

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def zero(self):
        return self.poly_ring.zero

    @property
    def one(self):
        return self.poly_ring.one

    def gen(self, name: str) -> PolyElement:
        return self.poly_ring.gen(name)

    @property
    def gens(self) -> tuple:
        return self.poly_ring.gens

    def element(self, value) -> PolyElement:
        if isinstance(value, str):
            return self.poly_ring.parse(value)
        if isinstance(value, PolyElement):
            return self.poly_ring.convert(value)
        return self.poly_ring.constant(value)

    def weight(self, name: str) -> tuple:
        return self.weights.weights[self.poly_ring.index(name)]

    def degree(self, f: PolyElement):
        return multidegree(self.element(f), self.weights)

    def reduce(self, f) -> PolyElement:
        return self.ideal.normal_form(self.element(f))

    def is_zero(self, f) -> bool:
        return not self.reduce(f)

    def equal(self, f, g) -> bool:
        return self.is_zero(self.element(f) - self.element(g))

    def format(self, f) -> str:
        f = self.element(f)
        if self.inverses:
            return format_laurent(f, self.poly_ring, self.inverses)
        return self.poly_ring.format(f)

    def format_relations(self) -> list:
        return self.ideal.format() if self.relations else []

    def describe(self) -> dict:
        return {
            "variables": [{"name": n, "weight": list(w)} for n, w in zip(self.names, self.weights.weights)],
            "relations": self.format_relations(),
        }

    # ---------- построение новых колец ----------

    def with_order(self, order: MonomialOrder) -> "GradedRing":
        return GradedRing(self.names, self.weights, self.relations, order, self.name, self.inverses)

    def quotient(self, extra: Iterable, name: str = "") -> "GradedRing":
        extra = [self.element(f) for f in extra]
        return GradedRing(self.names, self.weights, list(self.relations) + extra,
                          self.poly_ring.order, name or self.name, self.inverses)

    def extend(self, names: Sequence[str], weights, relations: Iterable = (),
               name: str = "", inverses: Mapping | None = None) -> "GradedRing":
        """Добавляет переменные (и соотношения в новом кольце)"""
        all_names = list(self.names) + list(names)
        all_weights = list(self.weights.weights) + list(WeightSystem.of(weights).weights)
        bigger = PolynomialRing(all_names)
        old = [bigger.convert(r, self.poly_ring) for r in self.relations]
        new = [bigger.parse(r) if isinstance(r, str) else bigger.convert(r) for r in relations]
        merged = dict(self.inverses)
        merged.update(inverses or {})
        return GradedRing(all_names, all_weights, old + new, name=name or self.name, inverses=merged)

    def localize(self, element, tag: str | None = None) -> "GradedRing":
        """R_r через тег-переменную: r * tag - 1"""
        r = self.element(element)
        degree = multidegree(r, self.weights)
        if degree is None or degree is ANY_DEGREE:
            raise SpecValidationError(f"cannot localize at inhomogeneous element {self.format(r)}")
        tag = tag or _tag_name(self, r)
        weight = tuple(-c for c in degree)
        inverses = {}
        if len(r) == 1 and sum(r.leading_expv()) == 1 and r.LC == 1:
            var = self.names[r.leading_expv().index(1)]
            inverses[var] = tag
        bigger = self.extend([tag], [weight], name=f"{self.name}_loc" if self.name else "", inverses=inverses)
        relation = bigger.element(r) * bigger.gen(tag) - bigger.one
        return bigger.quotient([relation])

    def renamed(self, mapping: Mapping[str, str], name: str = "") -> "GradedRing":
        names = [mapping.get(n, n) for n in self.names]
        target = PolynomialRing(names, self.poly_ring.order)
        relations = [transport(r, target, range(self.ngens)) for r in self.relations]
        inverses = {mapping.get(k, k): mapping.get(v, v) for k, v in self.inverses.items()}
        return GradedRing(names, self.weights, relations, self.poly_ring.order, name or self.name, inverses)


def _tag_name(ring: GradedRing, r: PolyElement) -> str:
    text = ring.poly_ring.format(r)
    base = text if text.isidentifier() else f"r{len(ring.names)}"
    name = f"{base}_inv"
    while name in ring.names:
        name = "_" + name
    return name


class RingMap:
    """Гомоморфизм, заданный образами образующих источника"""

    def __init__(self, source: GradedRing, target: GradedRing, images, name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        if isinstance(images, Mapping):
            images = [images[n] for n in source.names]
        images = [target.element(image) for image in images]
        if len(images) != source.ngens:
            raise SpecValidationError(f"map {name}: {len(images)} images for {source.ngens} generators")
        self.images = tuple(images)

    def __repr__(self):
        return f"RingMap({self.name}: {dict(self.describe())})"

    def __call__(self, f) -> PolyElement:
        f = self.source.element(f)
        return substitute(f, self.images, self.target.poly_ring)

    def image_of(self, name: str) -> PolyElement:
        return self.images[self.source.poly_ring.index(name)]

    def describe(self) -> dict:
        return {n: self.target.format(image) for n, image in zip(self.source.names, self.images)}

    def compose(self, first: "RingMap") -> "RingMap":
        """self ∘ first"""
        return RingMap(first.source, self.target, [self(image) for image in first.images],
                       name=f"{self.name}∘{first.name}")

    def check_well_defined(self) -> None:
        for relation in self.source.relations:
            if not self.target.is_zero(self(relation)):
                raise ConsistencyError(
                    f"map {self.name} sends relation {self.source.format(relation)} "
                    f"to nonzero {self.target.format(self(relation))}")

    def is_graded(self, degree_map=None) -> bool:
        """Однородность образов; degree_map переводит степени источника в степени цели"""
        degree_map = degree_map or (lambda d: d)
        for name, image in zip(self.source.names, self.images):
            expected = degree_map(self.source.weight(name))
            actual = self.target.degree(image)
            if actual is ANY_DEGREE:
                continue
            if actual != tuple(expected):
                return False
        return True

    def agrees_with(self, other: "RingMap") -> bool:
        return all(self.target.equal(a, b) for a, b in zip(self.images, other.images))


def identity_map(ring: GradedRing) -> RingMap:
    return RingMap(ring, ring, list(ring.gens), name="id")


# ---------- Упрощение представления ----------

def _solvable_variable(relation: PolyElement, protected: set):
    """Переменная v с соотношением c*v + g, где v не входит в g"""
    candidates = []
    ngens = relation.ring.ngens
    for k in range(ngens - 1, -1, -1):
        if k in protected:
            continue
        unit = tuple(1 if i == k else 0 for i in range(ngens))
        if unit not in relation:
            continue
        if any(m[k] for m in relation.itermonoms() if m != unit):
            continue
        candidates.append(k)
    return candidates[0] if candidates else None


def prune_presentation(ring: GradedRing, protected: Iterable[str] = ()):
    """Исключает переменные, линейно выражающиеся через остальные.

    Возвращает (новое кольцо, подстановка имя -> многочлен нового кольца)
    для всех переменных исходного кольца.
    """
    protected_idx = {ring.poly_ring.index(n) for n in protected}
    current = ring
    substitution = {n: None for n in ring.names}
    expressions = {n: ring.gen(n) for n in ring.names}
    # последняя переменная остаётся: кольцо k представляется как k[T]/(T - 1)
    while current.ngens > 1:
        chosen = None
        for relation in current.ideal.groebner_basis():
            k = _solvable_variable(relation, {current.poly_ring.index(n) for n in current.names
                                              if ring.poly_ring.index(n) in protected_idx})
            if k is not None:
                chosen = (relation, k)
                break
        if chosen is None:
            break
        relation, k = chosen
        var = current.names[k]
        unit = tuple(1 if i == k else 0 for i in range(current.ngens))
        coeff = relation[unit]
        value = -(relation - current.poly_ring.sympy_ring.term_new(unit, coeff)).quo_ground(coeff)
        keep = [n for n in current.names if n != var]
        smaller_poly = PolynomialRing(keep, current.poly_ring.order)
        images = [value if n == var else current.gen(n) for n in current.names]
        moved_images = [transport_free(image, smaller_poly, current, var) for image in images]

        def push(f, moved=moved_images, target=smaller_poly):
            return substitute(f, moved, target)

        relations = [push(r) for r in current.relations]
        weights = [w for n, w in zip(current.names, current.weights.weights) if n != var]
        inverses = {a: b for a, b in current.inverses.items() if var not in (a, b)}
        current_next = GradedRing(keep, weights, [r for r in relations if r],
                                  current.poly_ring.order, current.name, inverses)
        for n in ring.names:
            expressions[n] = push(expressions[n])
        current = current_next
        logger.debug(f"исключена переменная {var}")
    for n in ring.names:
        substitution[n] = current.element(expressions[n])
    return current, substitution


def transport_free(p: PolyElement, target: PolynomialRing, source: GradedRing, dropped: str) -> PolyElement:
    positions = [None if n == dropped else target.index(n) for n in source.names]
    return transport(p, target, positions)


# ---------- Лорановы расширения ----------

def laurent_ring(base: GradedRing, variables: Sequence[str], variable_weights: Sequence,
                 base_weight=None, name: str = "") -> GradedRing:
    """base[v, v^-1, ...] с тегами v_inv и соотношениями v*v_inv - 1.

    base_weight переводит вес переменной base в вес объемлющей градуировки.
    """
    base_weight = base_weight or (lambda w: w)
    names = list(base.names)
    weights = [tuple(base_weight(w)) for w in base.weights.weights]
    inverses = {}
    for var, w in zip(variables, variable_weights):
        names += [var, f"{var}_inv"]
        weights += [tuple(w), tuple(-c for c in w)]
        inverses[var] = f"{var}_inv"
    poly = PolynomialRing(names)
    relations = [poly.convert(r, base.poly_ring) for r in base.relations]
    for var in variables:
        relations.append(poly.gen(var) * poly.gen(f"{var}_inv") - poly.one)
    return GradedRing(names, weights, relations, name=name, inverses=inverses)


def laurent_power(ring: GradedRing, var: str, exponent: int) -> PolyElement:
    if exponent >= 0:
        return ring.gen(var) ** exponent
    return ring.gen(f"{var}_inv") ** (-exponent)
