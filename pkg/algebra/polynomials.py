"""Полиномы над QQ: кольца, мономиальные порядки, веса, разбор и печать.

Polynomial в qflop это sympy PolyElement, а PolynomialRing держит имена
переменных, порядок и соответствующий sympy PolyRing.
"""
from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import QQ, Symbol
from sympy.polys import orderings
from sympy.polys.monomials import monomial_divides
from sympy.polys.rings import PolyElement, PolyRing

from algebra.errors import (
    ExponentOverflowError,
    PolynomialParseError,
    SpecValidationError,
    VariableMismatchError,
)
from config import config

logger = logging.getLogger(__name__)

Monomial = tuple
MultiDegree = tuple


class _AnyDegree:
    """Степень нулевого многочлена: однороден любой степени"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "any"


ANY_DEGREE = _AnyDegree()


class Comparison(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


class _Projection:
    """Выбирает (возможно переставленный) срез показателей для одного блока"""

    def __init__(self, indices: tuple):
        self.indices = indices

    def __call__(self, monomial):
        return tuple(monomial[i] for i in self.indices)


class ComposedOrder(orderings.ProductOrder):
    """lex/grevlex по блокам переменных, первый блок доминирует.

    В отличие от ProductOrder сравнивается по содержимому, поэтому кольца
    с одинаковым описанием порядка в sympy считаются равными.
    """

    def __init__(self, kind: str, sizes: tuple, permutation: tuple):
        self.kind = kind
        self.sizes = sizes
        self.permutation = permutation
        base = orderings.lex if kind == "lex" else orderings.grevlex
        parts, start = [], 0
        for size in sizes:
            parts.append((base, _Projection(permutation[start:start + size])))
            start += size
        super().__init__(*parts)

    @property
    def alias(self):
        return f"{self.kind}{list(self.sizes)}"

    def __eq__(self, other):
        return isinstance(other, ComposedOrder) and \
            (self.kind, self.sizes, self.permutation) == (other.kind, other.sizes, other.permutation)

    def __hash__(self):
        return hash((ComposedOrder, self.kind, self.sizes, self.permutation))


@dataclass(frozen=True)
class MonomialOrder:
    """Описание мономиального порядка.

    kind: "lex", "grevlex", "block" (grevlex внутри блоков) или "pot"
    (position over term для свободных модулей, термы по grevlex).
    """

    kind: str = "grevlex"
    blocks: tuple = ()
    permutation: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block", "pot"):
            raise SpecValidationError(f"unknown monomial order {self.kind!r}")

    def sympy_order(self, nvars: int) -> ComposedOrder:
        permutation = self.permutation or tuple(range(nvars))
        if sorted(permutation) != list(range(nvars)):
            raise SpecValidationError(f"bad variable permutation {permutation} for {nvars} variables")
        if self.kind == "block":
            sizes = tuple(size for size in self.blocks if size > 0)
            if sum(sizes) != nvars:
                raise SpecValidationError(f"block sizes {self.blocks} do not cover {nvars} variables")
        else:
            sizes = (nvars,) if nvars else ()
        kind = "lex" if self.kind == "lex" else "grevlex"
        return ComposedOrder(kind, sizes, tuple(permutation))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(*sizes: int) -> MonomialOrder:
    return MonomialOrder("block", tuple(sizes))


def order_compare(order: MonomialOrder, m1, m2) -> Comparison:
    """Сравнение мономов; для "pot" мономы это пары (позиция, показатели)"""
    if order.kind == "pot":
        (pos1, e1), (pos2, e2) = m1, m2
        if pos1 != pos2:
            return Comparison.GT if pos1 < pos2 else Comparison.LT
        m1, m2 = e1, e2
        order = GREVLEX
    if len(m1) != len(m2):
        raise VariableMismatchError(f"monomials {m1} and {m2} live in different rings")
    key = order.sympy_order(len(m1))
    k1, k2 = key(m1), key(m2)
    if k1 == k2:
        return Comparison.EQ
    return Comparison.GT if k1 > k2 else Comparison.LT


@lru_cache(maxsize=512)
def _sympy_ring(names: tuple, order: MonomialOrder) -> PolyRing:
    return PolyRing([Symbol(name) for name in names], QQ, order.sympy_order(len(names)))


class PolynomialRing:
    """k[x_1..x_n] над рациональными числами"""

    def __init__(self, names: Sequence[str], order: MonomialOrder = GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            duplicates = sorted({name for name in names if names.count(name) > 1})
            raise SpecValidationError(f"duplicate variables: {duplicates}")
        self.names = names
        self.order = order
        self.sympy_ring = _sympy_ring(names, order)
        self._index = {name: i for i, name in enumerate(names)}

    def __repr__(self):
        return f"PolynomialRing({list(self.names)}, {self.order.kind})"

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and \
            (self.names, self.order) == (other.names, other.order)

    def __hash__(self):
        return hash((self.names, self.order))

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> PolyElement:
        return self.sympy_ring.zero

    @property
    def one(self) -> PolyElement:
        return self.sympy_ring.one

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VariableMismatchError(f"variable {name!r} not in {list(self.names)}") from None

    def gen(self, name: str) -> PolyElement:
        return self.sympy_ring.gens[self.index(name)]

    @property
    def gens(self) -> tuple:
        return self.sympy_ring.gens

    def constant(self, value) -> PolyElement:
        return self.sympy_ring.ground_new(QQ.convert(value))

    def monomial(self, exponents: Sequence[int], coeff=1) -> PolyElement:
        exponents = tuple(exponents)
        if len(exponents) != self.ngens:
            raise VariableMismatchError(f"monomial {exponents} has wrong length for {self}")
        _check_exponents(exponents)
        return self.sympy_ring.term_new(exponents, QQ.convert(coeff))

    def from_terms(self, terms: dict) -> PolyElement:
        return self.sympy_ring.from_dict({monom: QQ.convert(c) for monom, c in terms.items() if c})

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(self.names, order)

    def owns(self, p: PolyElement) -> bool:
        return isinstance(p, PolyElement) and p.ring == self.sympy_ring

    def convert(self, p: PolyElement, source: "PolynomialRing | None" = None) -> PolyElement:
        """Переносит многочлен в это кольцо по именам переменных"""
        if self.owns(p):
            return p
        source_names = source.names if source is not None else tuple(str(s) for s in p.ring.symbols)
        positions = []
        for name in source_names:
            positions.append(self._index.get(name))
        return transport(p, self, positions)

    def parse(self, text: str) -> PolyElement:
        return parse_polynomial(text, self)

    def format(self, p: PolyElement) -> str:
        return format_polynomial(p, self)


def _check_exponents(exponents):
    for e in exponents:
        if e > config.MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {config.MAX_EXPONENT}")


def transport(p: PolyElement, target: PolynomialRing, positions: Sequence) -> PolyElement:
    """Переносит p в target: переменная i уходит в позицию positions[i]"""
    result = {}
    width = target.ngens
    for monom, coeff in p.items():
        new = [0] * width
        for i, e in enumerate(monom):
            if not e:
                continue
            j = positions[i]
            if j is None:
                name = p.ring.symbols[i]
                raise VariableMismatchError(f"variable {name} has no counterpart in {target}")
            new[j] += e
        result[tuple(new)] = coeff
    return target.sympy_ring.from_dict(result)


def substitute(p: PolyElement, images: Sequence[PolyElement], target: PolynomialRing) -> PolyElement:
    """Образ p при подстановке x_i -> images[i]"""
    result = target.zero
    powers = [dict() for _ in images]

    def power(i, e):
        cached = powers[i].get(e)
        if cached is None:
            cached = images[i] ** e
            powers[i][e] = cached
        return cached

    for monom, coeff in p.items():
        term = target.constant(coeff)
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        result += term
    return result


def arithmetic(a: PolyElement, b: PolyElement, op: str) -> PolyElement:
    if a.ring != b.ring:
        raise VariableMismatchError(f"cannot combine polynomials over {a.ring.symbols} and {b.ring.symbols}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        product = a * b
        for monom in product.itermonoms():
            _check_exponents(monom)
        return product
    raise ValueError(f"unknown operation {op!r}")


# ---------- Веса и мультистепени ----------

@dataclass(frozen=True)
class WeightSystem:
    weights: tuple  # по одному вектору на переменную

    def __post_init__(self):
        dims = {len(w) for w in self.weights}
        if len(dims) > 1:
            raise SpecValidationError(f"weights of mixed dimensions {sorted(dims)}")

    @classmethod
    def of(cls, weights: Iterable) -> "WeightSystem":
        if isinstance(weights, WeightSystem):
            return weights
        vectors = []
        for w in weights:
            vectors.append((int(w),) if isinstance(w, int) else tuple(int(c) for c in w))
        return cls(tuple(vectors))

    @property
    def dim(self) -> int:
        return len(self.weights[0]) if self.weights else 1

    def __len__(self):
        return len(self.weights)

    def degree(self, monomial: Monomial) -> MultiDegree:
        total = [0] * self.dim
        for e, w in zip(monomial, self.weights):
            if e:
                for k, c in enumerate(w):
                    total[k] += e * c
        return tuple(total)

    def scalar(self) -> tuple:
        """Целые веса для Z-градуировки"""
        if self.dim != 1:
            raise SpecValidationError(f"expected Z-weights, got dimension {self.dim}")
        return tuple(w[0] for w in self.weights)

    def extended(self, more: Iterable) -> "WeightSystem":
        return WeightSystem.of(list(self.weights) + list(WeightSystem.of(more).weights))


def multidegree(p: PolyElement, weights: WeightSystem):
    """Общая мультистепень всех термов, None если p неоднороден"""
    if not p:
        return ANY_DEGREE
    degrees = {weights.degree(monom) for monom in p.itermonoms()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def term_degrees(p: PolyElement, weights: WeightSystem) -> list:
    return [weights.degree(monom) for monom in p.itermonoms()]


def divides(m1: Monomial, m2: Monomial) -> bool:
    return monomial_divides(m1, m2)


# ---------- Грамматика ----------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match or match.end() == pos:
            bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise PolynomialParseError(text, bad, f"unexpected character {stripped[bad]!r}")
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text: str, ring: PolynomialRing) -> PolyElement:
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = tokens[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            expected = value or kind
            found = tok[1] or "end of input"
            raise PolynomialParseError(text, tok[2], f"expected {expected}, found {found!r}")
        i += 1
        return tok

    def integer():
        tok = take("num")
        return int(tok[1]), tok[2]

    def factor(exponents):
        tok = take("name")
        if tok[1] not in ring._index:
            raise PolynomialParseError(text, tok[2], f"unknown variable {tok[1]!r}")
        power = 1
        if peek()[1] == "^":
            take(value="^")
            power, where = integer()
            if power > config.MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {power} at position {where} is too large")
        exponents[ring._index[tok[1]]] += power

    def term(sign):
        coeff = QQ(1)
        exponents = [0] * ring.ngens
        if peek()[0] == "num":
            num, _ = integer()
            coeff = QQ(num)
            if peek()[1] == "/":
                take(value="/")
                den, where = integer()
                if den == 0:
                    raise PolynomialParseError(text, where, "zero denominator")
                coeff = QQ(num, den)
        else:
            factor(exponents)
        while peek()[1] == "*":
            take(value="*")
            factor(exponents)
        _check_exponents(exponents)
        return ring.sympy_ring.term_new(tuple(exponents), coeff * sign)

    if peek()[0] == "end":
        raise PolynomialParseError(text, 0, "empty polynomial")
    result = ring.zero
    sign = QQ(1)
    if peek()[0] == "op" and peek()[1] in ("+", "-"):
        sign = QQ(-1) if take()[1] == "-" else QQ(1)
    result += term(sign)
    while peek()[0] != "end":
        tok = peek()
        if tok[1] not in ("+", "-"):
            raise PolynomialParseError(text, tok[2], f"expected '+' or '-', found {tok[1]!r}")
        take()
        result += term(QQ(-1) if tok[1] == "-" else QQ(1))
    return result


def _monomial_text(monom: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(p: PolyElement, ring: PolynomialRing) -> str:
    """Каноническая запись: термы по убыванию в порядке кольца"""
    if not p:
        return "0"
    parts = []
    for monom, coeff in p.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        body = _monomial_text(monom, ring.names)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)


def format_laurent(p: PolyElement, ring: PolynomialRing, inverses: dict) -> str:
    """Печать с объединением пар (u, u_inv) в u^k с целым k"""
    if not p:
        return "0"
    paired = {ring.index(inv): ring.index(var) for var, inv in inverses.items() if var in ring._index and inv in ring._index}
    parts = []
    for monom, coeff in p.terms():
        exps = list(monom)
        for inv, var in paired.items():
            exps[var] -= exps[inv]
            exps[inv] = 0
        factors = []
        for name, e in zip(ring.names, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        parts.append(("-" if negative else "+", text))
    first_sign, first = parts[0]
    text = f"-{first}" if first_sign == "-" else first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
