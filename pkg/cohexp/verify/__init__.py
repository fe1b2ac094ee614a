from cohexp.verify.pipeline import (
    CITED_FACTS,
    REDUCED_PRIMES,
    SUPPORTED_PRIMES,
    CounterexamplePipeline,
    verify_counterexample,
)
from cohexp.verify.report import CheckResult, CheckStatus, VerificationReport

__all__ = [
    "CITED_FACTS",
    "REDUCED_PRIMES",
    "SUPPORTED_PRIMES",
    "CheckResult",
    "CheckStatus",
    "CounterexamplePipeline",
    "VerificationReport",
    "verify_counterexample",
]
