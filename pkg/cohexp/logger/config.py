from typing import Literal

from pydantic import BaseModel, Field

LogLevelType = Literal["ERROR", "WARNING", "INFO", "DEBUG", "CRITICAL"]


class LoggerConfig(BaseModel):
    log_level: LogLevelType = Field(
        default="WARNING", description="Minimum level written to stderr."
    )
    run_id: str = Field(
        default="-", description="Identifier bound to every record of a run."
    )
    component: str = Field(
        default="cohexp", description="Default value of the component extra."
    )
