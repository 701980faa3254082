import logging
import time

from algebra.errors import SpecValidationError
from algebra.groebner import Budget, budget_scope
from config import ComputationOptions
from database.models import RingSpec

from .base_command import Report, options_for
from .derived_commands import BetaCheckCommand, DerivedQCommand, SODCheckCommand
from .property_p_command import PropertyPCommand
from .q_commands import (ChartsCommand, ChartTrivializationCommand, InvariantsCommand, LociCommand,
                         PresentQCommand, TorusQCommand)
from .self_test import SelfTestCommand
from .window_commands import FlopCheckCommand, FMCommand, WallCrossCommand, WindowCommand

logger = logging.getLogger(__name__)

COMMANDS = {command.name: command for command in (
    PresentQCommand(),
    LociCommand(),
    ChartsCommand(),
    PropertyPCommand(),
    FMCommand(),
    WindowCommand(),
    FlopCheckCommand(),
    WallCrossCommand(),
    DerivedQCommand(),
    BetaCheckCommand(),
    SODCheckCommand(),
    TorusQCommand(),
    InvariantsCommand(),
    ChartTrivializationCommand(),
)}


def dispatch(command: str, spec: RingSpec, options: ComputationOptions | None = None) -> Report:
    """Запускает команду в собственном бюджете и дописывает расход в отчёт"""
    handler = COMMANDS.get(command)
    if handler is None:
        raise SpecValidationError(f"unknown command {command!r}, expected one of {sorted(COMMANDS)}")
    options = options or options_for(spec)
    budget = Budget(options.budget_steps, options.budget_size)
    started = time.perf_counter()
    with budget_scope(budget):
        report = handler.run(spec, options)
    report.budget = budget.usage()
    report.timing = {"seconds": round(time.perf_counter() - started, 3)}
    logger.info(f"{command} {spec.name}: {len(report.verdicts)} вердиктов, {budget.steps} шагов")
    return report


COMMANDS["self-test"] = SelfTestCommand(COMMANDS, dispatch)
