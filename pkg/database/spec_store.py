import json
import logging
import os
from datetime import datetime
from typing import Dict, List

from algebra.errors import SpecValidationError
from config import config
from database.models import RingSpec

logger = logging.getLogger(__name__)


class SpecStore:
    """JSON-хранилище спецификаций колец и сохранённых отчётов"""

    def __init__(self, db_path: str = None):
        self.db_path = db_path or config.REGISTRY_PATH
        self._ensure_db_exists()

    def _ensure_db_exists(self):
        """Создаёт файл хранилища если его нет"""
        directory = os.path.dirname(self.db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        if not os.path.exists(self.db_path):
            self._save_data({"specs": [], "reports": []})

    def _load_data(self) -> Dict:
        with open(self.db_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        data.setdefault("specs", [])
        data.setdefault("reports", [])
        return data

    def _save_data(self, data: Dict):
        with open(self.db_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, ensure_ascii=False, indent=2, sort_keys=True)
            f.write("\n")

    def specs(self) -> List[RingSpec]:
        return [RingSpec.from_dict(doc) for doc in self._load_data()["specs"]]

    def names(self) -> List[str]:
        return [doc.get("name", "") for doc in self._load_data()["specs"]]

    def get(self, name: str) -> RingSpec:
        for doc in self._load_data()["specs"]:
            if doc.get("name") == name:
                return RingSpec.from_dict(doc)
        raise SpecValidationError(f"no ring spec named {name!r} in {self.db_path}")

    def add_spec(self, spec: RingSpec):
        data = self._load_data()
        if any(doc.get("name") == spec.name for doc in data["specs"]):
            raise SpecValidationError(f"ring spec {spec.name!r} already exists")
        data["specs"].append(spec.to_dict())
        self._save_data(data)
        logger.info(f"сохранена спецификация {spec.name}")

    def add_report(self, command: str, spec_name: str, report: Dict):
        data = self._load_data()
        data["reports"].append({
            "id": len(data["reports"]) + 1,
            "command": command,
            "spec": spec_name,
            "report": report,
            "saved_at": datetime.now().isoformat(),
        })
        self._save_data(data)

    def reports(self, spec_name: str = None) -> List[Dict]:
        reports = self._load_data()["reports"]
        if spec_name:
            return [r for r in reports if r.get("spec") == spec_name]
        return reports


def registry() -> List[RingSpec]:
    """Встроенные примеры из data/registry.json"""
    return SpecStore(config.REGISTRY_PATH).specs()


def load_spec(source: str) -> RingSpec:
    """Путь к JSON-файлу со спецификацией или имя из реестра"""
    if os.path.exists(source):
        with open(source, 'r', encoding='utf-8') as f:
            try:
                document = json.load(f)
            except json.JSONDecodeError as e:
                raise SpecValidationError(f"{source}: invalid JSON ({e})") from None
        return RingSpec.from_dict(document)
    return SpecStore(config.REGISTRY_PATH).get(source)
