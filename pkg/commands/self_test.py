import logging

from algebra.errors import QflopError
from algebra.verdict import Verdict
from config import ComputationOptions
from database.models import RingSpec
from database.spec_store import registry

from .base_command import BaseCommand, Report, options_for

logger = logging.getLogger(__name__)


class SelfTestCommand(BaseCommand):
    """Все применимые команды на всех примерах реестра"""

    def __init__(self, commands: dict, dispatch):
        super().__init__(
            name="self-test",
            description="runs every applicable command on every registry entry",
        )
        self.commands = commands
        self.dispatch = dispatch

    def applicable(self, spec: RingSpec) -> bool:
        return False

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        report = Report(self.name, "registry")
        summary = {}
        for entry in registry():
            entry_options = options_for(entry, options.override(extra={}))
            for name, command in sorted(self.commands.items()):
                if name == self.name or not command.applicable(entry):
                    continue
                key = f"{entry.name}/{name}"
                try:
                    result = self.dispatch(name, entry, entry_options)
                except QflopError as e:
                    logger.error(f"{key}: {e}")
                    report.add_verdict(key, Verdict(False, f"{type(e).__name__}: {e}"))
                    continue
                report.add_verdict(key, Verdict(True, "computed"))
                summary[key] = {verdict: value["holds"] for verdict, value in result.verdicts.items()}
        report.add_table("verdicts", summary)
        return report
