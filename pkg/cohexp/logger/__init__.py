from cohexp.logger.config import LoggerConfig, LogLevelType
from cohexp.logger.factory import stage_context
from cohexp.logger.setup import new_run_id, setup_logger

__all__ = ["LoggerConfig", "LogLevelType", "new_run_id", "setup_logger", "stage_context"]
