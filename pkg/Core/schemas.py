# Core/schemas.py
from __future__ import annotations

from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

Status = Literal["pass", "fail", "skipped"]
SUITES = ("relations", "series-identities", "gauss", "hc-center", "p-center", "maps", "gr", "recursion")


class CheckReport(BaseModel):
    kind: Literal["check"] = "check"
    id: str
    params: Dict[str, Any] = Field(default_factory=dict)
    status: Status
    witness: Optional[List[Any]] = None
    note: Optional[str] = None

    @model_validator(mode="after")
    def _fail_needs_witness(self) -> "CheckReport":
        if self.status == "fail" and self.witness is None and self.note is None:
            raise ValueError(f"failing check {self.id} carries neither witness nor note")
        return self

    def sort_key(self) -> tuple:
        return (self.id, sorted((k, repr(v)) for k, v in self.params.items()))


class CentralityCertificate(CheckReport):
    kind: Literal["centrality"] = "centrality"  # type: ignore[assignment]
    scope: str
    budget: int
    tested: int = 0
    failing_against: Optional[str] = None


AnyReport = Annotated[Union[CheckReport, CentralityCertificate], Field(discriminator="kind")]


class SuiteSummary(BaseModel):
    pass_: int = Field(0, alias="pass")
    fail: int = 0
    skipped: int = 0

    model_config = {"populate_by_name": True}

    @classmethod
    def of(cls, checks: List[CheckReport]) -> "SuiteSummary":
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for check in checks:
            counts[check.status] += 1
        return cls(**counts)


class RunConfig(BaseModel):
    n: int = 2
    p: int = 3
    mu: List[int] = Field(default_factory=lambda: [1, 1])
    sigma: Union[str, List[List[int]]] = "zero"
    trunc: int = 6
    budget: int = 4
    ell: int = 2
    suite: str = "all"
    out: Optional[str] = None
    workers: int = 1
    seed: int = 0
    format: Literal["json", "text"] = "json"
    budgets: Dict[str, int] = Field(default_factory=dict)
    matrix: bool = False

    @field_validator("p")
    @classmethod
    def _odd_prime(cls, value: int) -> int:
        if value < 3 or not isprime(value):
            raise ValueError(f"p must be an odd prime, got {value}")
        return value

    @field_validator("n", "trunc", "budget", "workers")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"expected a positive integer, got {value}")
        return value

    @field_validator("ell")
    @classmethod
    def _nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"ell must be nonnegative, got {value}")
        return value

    @field_validator("suite")
    @classmethod
    def _known_suite(cls, value: str) -> str:
        if value != "all" and value not in SUITES:
            raise ValueError(f"unknown suite {value!r}; choose from all, {', '.join(SUITES)}")
        return value

    @model_validator(mode="after")
    def _shape(self) -> "RunConfig":
        if any(part < 1 for part in self.mu) or sum(self.mu) != self.n:
            raise ValueError(f"mu {self.mu} must have positive parts summing to n={self.n}")
        if isinstance(self.sigma, list):
            if len(self.sigma) != self.n or any(len(row) != self.n for row in self.sigma):
                raise ValueError(f"sigma must be {self.n}x{self.n}")
        elif self.sigma != "zero" and ";" not in self.sigma and self.n > 1:
            raise ValueError(f"sigma must be 'zero', rows like '0,1;0,0', or a matrix, got {self.sigma!r}")
        return self

    def budget_for(self, key: str, default: int) -> int:
        return self.budgets.get(key, default)

    def echo(self) -> Dict[str, Any]:
        """Config fields that determine the report content."""
        return self.model_dump(exclude={"out", "workers", "format"})


class SuiteReport(BaseModel):
    config: Dict[str, Any]
    checks: List[AnyReport] = Field(default_factory=list)
    summary: SuiteSummary = Field(default_factory=SuiteSummary)

    def finalize(self) -> "SuiteReport":
        self.checks = sorted(self.checks, key=lambda c: c.sort_key())
        self.summary = SuiteSummary.of(self.checks)
        return self

    @property
    def passed(self) -> bool:
        return self.summary.fail == 0
