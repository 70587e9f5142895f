"""Pydantic records for run configuration, suite reports and CLI output."""

from __future__ import annotations

import json
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from . import config

SuiteName = Literal[
    "relations",
    "triangularity",
    "eigen",
    "limits",
    "pbw-bounds",
    "main-theorem",
    "bruhat",
]
SUITES: tuple[str, ...] = SuiteName.__args__  # type: ignore[attr-defined]


class RunConfig(BaseModel):
    """Bounds and options shared by every verification suite."""

    model_config = ConfigDict(frozen=True)

    suite: SuiteName = Field(description="Which verification suite to run")
    max_rank: int = Field(
        default=config.MAX_RANK, description="Largest rank k visited by the suite"
    )
    max_degree: int = Field(
        default=config.MAX_DEGREE, description="Largest degree visited by the suite"
    )
    seed: int = Field(default=config.SEED, description="Seed for randomized checks")
    output_format: str = Field(
        default=config.OUTPUT_FORMAT, description="One of text, json or csv"
    )

    @field_validator("max_rank")
    @classmethod
    def validate_rank(cls, value: int) -> int:
        if not 1 <= value <= config.RANK_CEILING:
            raise ValueError(f"max_rank must be between 1 and {config.RANK_CEILING}")
        return value

    @field_validator("max_degree")
    @classmethod
    def validate_degree(cls, value: int) -> int:
        if not 1 <= value <= config.DEGREE_CEILING:
            raise ValueError(
                f"max_degree must be between 1 and {config.DEGREE_CEILING}"
            )
        return value

    @field_validator("output_format")
    @classmethod
    def validate_format(cls, value: str) -> str:
        cleaned = value.strip().lower()
        if cleaned not in config.OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {', '.join(config.OUTPUT_FORMATS)}"
            )
        return cleaned


class CheckResult(BaseModel):
    name: str = Field(description="Property being checked")
    instance: str = Field(description="Concrete input the property was checked on")
    passed: bool = Field(description="Whether the property held exactly")
    detail: str = Field(default="", description="Failure description, if any")


class SuiteReport(BaseModel):
    """Outcome of one suite run, in the order the instances were visited."""

    suite: str = Field(description="Suite name")
    config: RunConfig = Field(description="Configuration the suite ran with")
    results: list[CheckResult] = Field(
        default_factory=list, description="Every checked instance"
    )

    @computed_field(description="True when every instance passed")
    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @computed_field(description="Counts of checked and failed instances")
    @property
    def summary(self) -> dict[str, int]:
        failed = sum(1 for result in self.results if not result.passed)
        return {"checked": len(self.results), "failed": failed}

    def add(self, name: str, instance: object, passed: bool, detail: str = "") -> None:
        self.results.append(
            CheckResult(name=name, instance=str(instance), passed=passed, detail=detail)
        )

    def add_failures(self, name: str, instance: object, failures: list[str]) -> None:
        """Record a checker that reports its violations as a list of messages."""
        self.add(name, instance, not failures, "; ".join(failures))

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)


class PBWTermRecord(BaseModel):
    mu: list[int] = Field(description="Exponents of X_1..X_k")
    nu: list[int] = Field(description="Exponents of Y_1..Y_k")
    w: list[int] = Field(description="Permutation in one-line notation")
    coeff: str = Field(description="Coefficient in Q[q, h]")


class AsymTermRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lambda_: list[int] = Field(
        alias="lambda", description="Strict composition of the basis element"
    )
    mu: list[int] = Field(description="Partition of the symmetric tail")
    coeff: str = Field(description="Coefficient in Q(q, t)")
