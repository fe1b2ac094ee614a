import uuid
from typing import TYPE_CHECKING, Optional

import loguru

from cohexp.logger.config import LoggerConfig, LogLevelType
from cohexp.logger.factory import LoggerFactory
from cohexp.logger.handlers.stderr_handler import StderrHandler

if TYPE_CHECKING:
    from loguru import Logger


def normalise_exception(record: "loguru.Record") -> None:
    """Replace exception values by plain Exceptions carrying their message."""
    exception: loguru.RecordException | None = record.get("exception")
    if exception and exception.value is not None:
        record["exception"] = exception._replace(value=Exception(str(exception.value)))


def new_run_id() -> str:
    return uuid.uuid4().hex[:8]


def setup_logger(
    level: LogLevelType, run_id: Optional[str] = None, component: str = "cohexp"
) -> "Logger":
    """Route cohexp logging to stderr at ``level``; each call starts a fresh run id unless one is given."""
    config = LoggerConfig(log_level=level, run_id=run_id or new_run_id(), component=component)
    factory = LoggerFactory(config)
    factory.add_patcher(normalise_exception)
    factory.add_handler(StderrHandler())
    return factory.build()
