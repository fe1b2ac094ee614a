from __future__ import annotations

import json
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    CITED = "cited"


class CheckResult(BaseModel):
    """
    One line of a verification report.

    ``anchor`` is the verbatim source quote the check traces back to; it is
    serialised as ``paper_anchor``. ``claim`` restates the checked statement
    in the notation of this package. Cited facts are external inputs and are
    never marked as passed.
    """

    model_config = ConfigDict(populate_by_name=True)

    check_id: str
    anchor: str = Field(alias="paper_anchor")
    claim: str
    status: CheckStatus
    details: dict[str, Any] = Field(default_factory=dict)

    @property
    def computed(self) -> bool:
        return self.status is not CheckStatus.CITED


class VerificationReport(BaseModel):
    p: int
    checks: list[CheckResult] = Field(default_factory=list)
    verdict: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff no computed check failed."""
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.status is CheckStatus.FAIL), None)

    def cited(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.CITED]

    def get(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def payload(self) -> dict[str, Any]:
        """JSON-ready dict using the external field names."""
        return self.model_dump(mode="json", by_alias=True)

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, fixed indentation."""
        return json.dumps(self.payload(), sort_keys=True, indent=2)
