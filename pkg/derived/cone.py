"""Конус S_der отображения eta: Q_der -> Delta(R) = k[x][u, u^-1]<e>.

eta переводит eps_S * q в e_S * u^{m_S} * eta(q) и инъективно на мономах,
поэтому Q_der - координатный подкомплекс в Delta, а конус квазиизоморфен
фактору Delta/Q_der. Всё считается по кускам (t, k): t - обычная степень по x
с учётом нечётных образующих, k - показатель u; каждый кусок конечномерен.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from sympy import Matrix, Rational

from algebra.errors import ConsistencyError, SpecValidationError
from algebra.rings import GradedRing
from algebra.verdict import Verdict
from config import config
from derived.q_der import QDer, q_der

logger = logging.getLogger(__name__)


def _standard_degree(f) -> int:
    degrees = {sum(m) for m in f.itermonoms()}
    if len(degrees) != 1:
        raise SpecValidationError("S_der pieces need relations homogeneous in the standard grading")
    return degrees.pop()


def _monomials(n: int, total: int) -> list:
    result = []
    for combo in itertools.combinations_with_replacement(range(n), total):
        exps = [0] * n
        for k in combo:
            exps[k] += 1
        result.append(tuple(exps))
    return result


def _rank(matrix: Matrix) -> int:
    return matrix.rank() if matrix.rows and matrix.cols else 0


@dataclass
class ConePiece:
    t: int
    k: int
    q: list = field(default_factory=list)
    delta: list = field(default_factory=list)
    cone: list = field(default_factory=list)
    maps: list = field(default_factory=list)   # ранги H_i(Q) -> H_i(Delta)

    def les_holds(self) -> bool:
        for i, h in enumerate(self.cone):
            expected = self.delta[i] - self.maps[i]
            if i >= 1:
                expected += self.q[i - 1] - self.maps[i - 1]
            if h != expected:
                return False
        return True

    def euler_holds(self) -> bool:
        def chi(values):
            return sum((-1) ** i * v for i, v in enumerate(values))
        return chi(self.cone) == chi(self.delta) - chi(self.q)

    def describe(self) -> dict:
        return {"Q_der": self.q, "Delta": self.delta, "cone": self.cone, "eta_ranks": self.maps,
                "les": self.les_holds()}


class _PieceComplex:
    """Базисы Delta_i и подмножества Q_der_i в одном куске (t, k)"""

    def __init__(self, qd: QDer, t: int, k: int):
        cover = qd.cover
        self.n = cover.base.ngens
        self.c = cover.length
        self.t, self.k = t, k
        self.relations = cover.differential
        self.t_odd = [_standard_degree(f) for f in self.relations]
        self.m_odd = [min(w, 0) for w in qd.relation_weights]
        self.degrees = cover.base.weights.scalar()
        self.basis = {}
        self.in_q = {}
        for i in range(self.c + 1):
            basis = []
            for subset in itertools.combinations(range(self.c), i):
                rest = t - sum(self.t_odd[s] for s in subset)
                if rest < 0:
                    continue
                basis.extend((subset, alpha) for alpha in _monomials(self.n, rest))
            self.basis[i] = basis
            self.in_q[i] = [self._in_q(subset, alpha) for subset, alpha in basis]

    def _in_q(self, subset, alpha) -> bool:
        k_q = self.k - sum(self.m_odd[s] for s in subset)
        c = k_q + sum(-d * a for d, a in zip(self.degrees, alpha) if d < 0)
        return c >= 0

    def differential(self, i: int) -> Matrix:
        """Delta_i -> Delta_{i-1} в мономиальных базисах"""
        rows, cols = self.basis.get(i - 1, []), self.basis.get(i, [])
        index = {b: r for r, b in enumerate(rows)}
        matrix = Matrix.zeros(len(rows), len(cols))
        for col, (subset, alpha) in enumerate(cols):
            for j, s in enumerate(subset):
                face = subset[:j] + subset[j + 1:]
                sign = -1 if j % 2 else 1
                for beta, coeff in self.relations[s].items():
                    target = (face, tuple(a + b for a, b in zip(alpha, beta)))
                    value = Rational(int(coeff.numerator), int(coeff.denominator))
                    matrix[index[target], col] += sign * value
        return matrix

    def restrict(self, matrix: Matrix, i: int, inside: bool) -> Matrix:
        rows = [r for r, flag in enumerate(self.in_q.get(i - 1, [])) if flag == inside]
        cols = [c for c, flag in enumerate(self.in_q.get(i, [])) if flag == inside]
        return matrix.extract(rows, cols) if rows and cols else Matrix.zeros(len(rows), len(cols))

    def check_subcomplex(self, matrix: Matrix, i: int) -> None:
        rows = [r for r, flag in enumerate(self.in_q.get(i - 1, [])) if not flag]
        cols = [c for c, flag in enumerate(self.in_q.get(i, [])) if flag]
        if rows and cols and any(matrix.extract(rows, cols)):
            raise ConsistencyError(f"Q_der is not a subcomplex of Delta in piece ({self.t}, {self.k})")


def _homology_dims(size: dict, ranks: dict, top: int) -> list:
    return [size[i] - ranks.get(i, 0) - ranks.get(i + 1, 0) for i in range(top + 1)]


def _piece(qd: QDer, t: int, k: int) -> ConePiece:
    complex_ = _PieceComplex(qd, t, k)
    top = complex_.c
    full = {i: complex_.differential(i) for i in range(1, top + 1)}
    for i, matrix in full.items():
        complex_.check_subcomplex(matrix, i)
    sizes = {"delta": {}, "q": {}, "cone": {}}
    ranks = {"delta": {}, "q": {}, "cone": {}}
    for i in range(top + 1):
        flags = complex_.in_q[i]
        sizes["delta"][i] = len(flags)
        sizes["q"][i] = sum(flags)
        sizes["cone"][i] = len(flags) - sum(flags)
    for i, matrix in full.items():
        ranks["delta"][i] = _rank(matrix)
        ranks["q"][i] = _rank(complex_.restrict(matrix, i, True))
        ranks["cone"][i] = _rank(complex_.restrict(matrix, i, False))

    piece = ConePiece(t, k)
    piece.q = _homology_dims(sizes["q"], ranks["q"], top)
    piece.delta = _homology_dims(sizes["delta"], ranks["delta"], top)
    piece.cone = _homology_dims(sizes["cone"], ranks["cone"], top)
    for i in range(top + 1):
        q_cols = [c for c, flag in enumerate(complex_.in_q[i]) if flag]
        if not q_cols:
            piece.maps.append(0)
            continue
        size = len(complex_.in_q[i])
        embed = Matrix.zeros(size, len(q_cols))
        for j, c in enumerate(q_cols):
            embed[c, j] = 1
        if i >= 1 and sizes["q"].get(i - 1):
            cycles = [embed * v for v in complex_.restrict(full[i], i, True).nullspace()]
        else:
            cycles = [embed[:, j] for j in range(len(q_cols))]
        boundary = full.get(i + 1, Matrix.zeros(size, 0))
        stacked = Matrix.hstack(boundary, *cycles) if cycles else boundary
        piece.maps.append(_rank(stacked) - _rank(boundary))
    return piece


@dataclass
class SDerReport:
    pieces: dict
    bound: int
    verdict: Verdict

    def dim(self, t: int, k: int, i: int, which: str = "cone") -> int:
        values = getattr(self.pieces[(t, k)], which)
        return values[i] if i < len(values) else 0

    def describe(self) -> dict:
        return {
            "bound": self.bound,
            "pieces": {f"{t},{k}": piece.describe() for (t, k), piece in sorted(self.pieces.items())},
            "verdict": self.verdict.to_dict(),
        }


def s_der_cone(ring: GradedRing, bound: int | None = None, window: tuple | None = None,
               max_degree: int | None = None) -> SDerReport:
    """Гомологии S_der по кускам (t, k), t <= max_degree, k в window"""
    bound = config.HOMOLOGY_BOUND if bound is None else bound
    lo, hi = window or config.DEGREE_WINDOW
    max_degree = config.MONOMIAL_CAP if max_degree is None else max_degree
    qd = q_der(ring, bound)
    pieces = {}
    failures = []
    for t in range(max_degree + 1):
        for k in range(lo, hi + 1):
            piece = _piece(qd, t, k)
            if not (piece.les_holds() and piece.euler_holds()):
                failures.append(f"({t}, {k})")
            for name in ("q", "delta", "cone"):
                values = getattr(piece, name)[:bound + 1]
                setattr(piece, name, values + [0] * (bound + 1 - len(values)))
            piece.maps = (piece.maps + [0] * (bound + 1))[:bound + 1]
            pieces[(t, k)] = piece
    verdict = Verdict(not failures, "long exact sequence ranks agree in every piece", failures)
    logger.info(f"S_der: {len(pieces)} кусков, LES {'сходится' if not failures else 'нарушена'}")
    return SDerReport(pieces, bound, verdict)
