"""Свойство P: rho изоморфизм и Tor_i(Q_s, Q_p) = 0 при i > 0."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from algebra.rings import GradedRing
from algebra.verdict import Verdict
from equivariant.q_construction import q_present
from homological.tensor import RhoMap, rho_iso_check, rho_map
from homological.tor import TorTable, tor_bimodule

logger = logging.getLogger(__name__)

HAS_P = "has_P"
FAILS_P = "fails_P"


@dataclass
class PropertyPReport:
    rho_iso: Verdict
    tor_table: TorTable
    conclusion: str
    reason: str
    rho: RhoMap = None

    @property
    def has_p(self) -> bool:
        return self.conclusion == HAS_P

    def describe(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "reason": self.reason,
            "rho": self.rho_iso.to_dict(),
            "rho_map": self.rho.describe() if self.rho else {},
            "tensor": self.rho.tensor.ring.describe() if self.rho else {},
            "tor": self.tor_table.describe(),
        }


def property_p_check(ring: GradedRing, tor_bound: int) -> PropertyPReport:
    qp = q_present(ring)
    rho = rho_map(qp)
    rho_iso = rho_iso_check(rho)
    tor = tor_bimodule(qp, tor_bound)
    if not rho_iso.holds:
        conclusion = FAILS_P
        failed = [name for name in ("injective", "surjective") if not rho_iso.checks[name].holds]
        reason = f"rho is not {' and not '.join(failed)}"
    elif not tor.all_vanish:
        conclusion = FAILS_P
        nonzero = [i for i in range(1, tor_bound + 1) if not tor.vanishes(i)]
        reason = f"Tor_{nonzero[0]} is nonzero"
    else:
        conclusion = HAS_P
        if tor.certified:
            reason = "rho is an isomorphism; Koszul certificate gives Tor_i = 0 for all i > 0"
        else:
            reason = f"rho is an isomorphism; Tor_i = 0 for 1 <= i <= {tor_bound} (bounded evidence)"
    logger.info(f"свойство P для {ring.name or 'R'}: {conclusion} ({reason})")
    return PropertyPReport(rho_iso, tor, conclusion, reason, rho)
