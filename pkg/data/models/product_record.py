"""Product metadata records and corpora."""

from dataclasses import dataclass
from datetime import datetime
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from api.exceptions import ValidationError


class ProductRecord(BaseModel):
    """Metadata of one CAD model as scraped or synthesized."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    category: Optional[str] = None
    name: str
    author: str = ""
    description: str = ""
    parts: Tuple[str, ...] = ()
    tags: Tuple[str, ...] = ()
    likes: int = Field(default=0, ge=0)
    timestamp: str = ""
    comments: Tuple[str, ...] = ()

    @field_validator("timestamp")
    @classmethod
    def _iso_timestamp(cls, value: str) -> str:
        if value:
            datetime.fromisoformat(value)
        return value


class UnknownCategoryError(ValidationError):
    def __init__(self, record_id: str, category: str):
        super().__init__(
            f"Record {record_id!r} has unknown category {category!r}",
            details={"id": record_id, "category": category},
        )


@dataclass(frozen=True)
class Corpus:
    """Records plus the sorted label set their categories are drawn from."""

    records: Tuple[ProductRecord, ...]
    labels: Tuple[str, ...]

    def __post_init__(self):
        if list(self.labels) != sorted(set(self.labels)):
            raise ValidationError(
                f"Corpus labels must be sorted and unique: {list(self.labels)}"
            )
        known = set(self.labels)
        ids = set()
        for record in self.records:
            if record.id in ids:
                raise ValidationError(
                    f"Duplicate record id {record.id!r}", details={"id": record.id}
                )
            ids.add(record.id)
            if record.category is not None and record.category not in known:
                raise UnknownCategoryError(record.id, record.category)

    @classmethod
    def from_records(
        cls, records: Iterable[ProductRecord], labels: Optional[Iterable[str]] = None
    ) -> "Corpus":
        """Build a corpus, deriving labels from the records when none are given."""
        records = tuple(records)
        if labels is None:
            labels = {r.category for r in records if r.category is not None}
        return cls(records=records, labels=tuple(sorted(set(labels))))

    def __len__(self) -> int:
        return len(self.records)

    def count_by_label(self) -> dict:
        counts = {label: 0 for label in self.labels}
        for record in self.records:
            if record.category is not None:
                counts[record.category] += 1
        return counts
