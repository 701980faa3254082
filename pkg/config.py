import os
from dotenv import load_dotenv
load_dotenv()

from dataclasses import dataclass, field, replace
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent


def _window(text: str) -> tuple:
    lo, hi = text.split(":")
    return int(lo), int(hi)


def _flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "yes", "on")


@dataclass
class Config:
    # Бюджеты движка Грёбнера
    BUDGET_STEPS: int = int(os.getenv("QFLOP_BUDGET_STEPS", "1000000"))
    BUDGET_SIZE: int = int(os.getenv("QFLOP_BUDGET_SIZE", "10000"))

    # Окна и границы по умолчанию
    DEGREE_WINDOW: tuple = _window(os.getenv("QFLOP_DEGREE_WINDOW", "-5:5"))
    TOR_BOUND: int = int(os.getenv("QFLOP_TOR_BOUND", "2"))
    HOMOLOGY_BOUND: int = int(os.getenv("QFLOP_HOMOLOGY_BOUND", "3"))
    MONOMIAL_CAP: int = int(os.getenv("QFLOP_MONOMIAL_CAP", "6"))
    HILBERT_CAP: int = int(os.getenv("QFLOP_HILBERT_CAP", "0"))  # 0 = формула по весам

    MAX_EXPONENT: int = 2**31 - 1

    # Пути к данным
    REGISTRY_PATH: str = str(PROJECT_ROOT / "data" / "registry.json")
    REPORTS_PATH: str = os.getenv("QFLOP_REPORTS_PATH", str(PROJECT_ROOT / "data" / "reports.json"))

    LOG_LEVEL: str = os.getenv("QFLOP_LOG_LEVEL", "WARNING")
    REPORT_TIMING: bool = _flag("QFLOP_REPORT_TIMING")


config = Config()


@dataclass(frozen=True)
class ComputationOptions:
    """Параметры одного запуска: значения config, перекрытые флагами CLI"""

    budget_steps: int = config.BUDGET_STEPS
    budget_size: int = config.BUDGET_SIZE
    degree_window: tuple = config.DEGREE_WINDOW
    tor_bound: int = config.TOR_BOUND
    homology_bound: int = config.HOMOLOGY_BOUND
    monomial_cap: int = config.MONOMIAL_CAP
    hilbert_cap: int = config.HILBERT_CAP
    twist: int = 0
    extra: dict = field(default_factory=dict)

    def override(self, **changes) -> "ComputationOptions":
        changes = {key: value for key, value in changes.items() if value is not None}
        return replace(self, **changes)
