from contextlib import contextmanager
from typing import TYPE_CHECKING, Iterator

from loguru import logger

from cohexp.logger.config import LoggerConfig
from cohexp.logger.handlers.abstracts import LogHandler, RecordPatcher

if TYPE_CHECKING:
    from loguru import Logger, Record


class LoggerFactory:
    """Configures the shared loguru logger from a LoggerConfig and a set of handlers."""

    def __init__(self, config: LoggerConfig) -> None:
        self.config = config
        self.handlers: list[LogHandler] = []
        self.patchers: list[RecordPatcher] = []

    def add_handler(self, handler: LogHandler) -> None:
        self.handlers.append(handler)

    def add_patcher(self, patcher: RecordPatcher) -> None:
        self.patchers.append(patcher)

    def _patch(self, record: "Record") -> None:
        for patcher in self.patchers:
            patcher(record)

    def build(self) -> "Logger":
        logger.remove()
        logger.configure(
            extra={
                "component": self.config.component,
                "run_id": self.config.run_id,
                "stage": "-",
            },
            patcher=self._patch if self.patchers else None,
        )
        for handler in self.handlers:
            handler.attach(self.config.log_level)
        return logger


@contextmanager
def stage_context(stage: str, **extra: object) -> Iterator[None]:
    """Tag every record emitted inside the block with a pipeline stage."""
    with logger.contextualize(stage=stage, **extra):
        yield
