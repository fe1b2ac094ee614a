from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Callable, Optional, TextIO

from loguru import logger

from cohexp.logger.config import LogLevelType

if TYPE_CHECKING:
    from loguru import Record

RecordPatcher = Callable[["Record"], None]
RecordFilter = Callable[["Record"], bool]


class LogHandler(ABC):
    """
    A loguru sink plus the format it is written with.

    Subclasses choose where records go and how a line looks at a given
    level; ``attach`` registers the sink with the shared logger.
    """

    def __init__(self, filter_fn: Optional[RecordFilter] = None) -> None:
        self._filter_fn = filter_fn

    @abstractmethod
    def stream(self) -> TextIO:
        ...

    @abstractmethod
    def line_format(self, level: LogLevelType) -> str:
        ...

    def attach(self, level: LogLevelType) -> int:
        def write(message: str) -> None:
            self.stream().write(message)

        return logger.add(
            write,
            level=level.upper(),
            format=self.line_format(level),
            diagnose=False,
            filter=self._filter_fn,
        )
