import sys
from typing import TextIO

from cohexp.logger.config import LogLevelType
from cohexp.logger.handlers.abstracts import LogHandler

BASE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan>:<cyan>{extra[stage]}</cyan> | "
    "<level>{message}</level>"
)


class StderrHandler(LogHandler):
    """Coloured single-line records on stderr; stdout is reserved for reports."""

    def stream(self) -> TextIO:
        # looked up per record so a swapped sys.stderr is honoured
        return sys.stderr

    def line_format(self, level: LogLevelType) -> str:
        if level.upper() == "DEBUG":
            return BASE_FORMAT + " | run={extra[run_id]}"
        return BASE_FORMAT
