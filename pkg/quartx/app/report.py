"""Serializable results of the table and verify commands."""

from __future__ import annotations

import json
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

SCHEMA_VERSION = 1


class VerificationEntry(BaseModel):
    """One quantity computed up to three ways."""

    event: str
    case: str
    brute: Optional[int] = None
    sum_form: Optional[int] = None
    closed_form: int
    match: bool = False

    @model_validator(mode="after")
    def _compute_match(self) -> "VerificationEntry":
        values = {value for value in (self.brute, self.sum_form, self.closed_form) if value is not None}
        self.match = len(values) == 1
        return self

    @property
    def key(self) -> str:
        return f"{self.event}/{self.case}"


class VerificationReport(BaseModel):
    schema_: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    n: int = Field(ge=2)
    include_brute: bool
    overall_pass: bool = False
    entries: list[VerificationEntry]
    timing: dict[str, float] = Field(default_factory=dict)

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _compute_pass(self) -> "VerificationReport":
        self.overall_pass = all(entry.match for entry in self.entries)
        return self

    def failures(self) -> list[VerificationEntry]:
        return [entry for entry in self.entries if not entry.match]

    def to_json(self, *, include_timing: bool = True) -> str:
        exclude = None if include_timing else {"timing"}
        payload = self.model_dump(by_alias=True, exclude=exclude)
        return json.dumps(payload, indent=2, sort_keys=False)


class TableRow(BaseModel):
    """Distance and normalised ratio of the prefix/suffix tree pair for one ``n``."""

    n: int
    leaves: int
    distance: int
    total: int
    ratio_exact: str
    ratio: str

    def tsv(self) -> str:
        return "\t".join(
            str(value)
            for value in (self.n, self.leaves, self.distance, self.total, self.ratio_exact, self.ratio)
        )


TABLE_COLUMNS: tuple[str, ...] = ("n", "leaves", "distance", "total", "ratio_exact", "ratio")


def table_json(rows: list[TableRow]) -> str:
    payload = {"schema": SCHEMA_VERSION, "rows": [row.model_dump() for row in rows]}
    return json.dumps(payload, indent=2, sort_keys=False)


__all__ = [
    "SCHEMA_VERSION",
    "TABLE_COLUMNS",
    "TableRow",
    "VerificationEntry",
    "VerificationReport",
    "table_json",
]
