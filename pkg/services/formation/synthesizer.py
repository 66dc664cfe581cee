"""Seeded synthetic product corpus.

The scraped CAD catalogue is not public, so the pipeline trains on a generated
stand-in with the same six categories and, by default, the same per-category
record counts. Each record draws its text slots from its category's planted
vocabulary with probability ``vocab_strength`` and from a shared vocabulary
otherwise; part and tag counts and the way planted parts share tokens follow
the category's structural profile.
"""

import logging
from datetime import datetime, timedelta, timezone
from typing import List, Mapping, Optional

from api.exceptions import ValidationError
from data.models.product_record import Corpus, ProductRecord
from services.core.constants import (
    CATEGORIES,
    DEFAULT_VOCAB_STRENGTH,
    REFERENCE_CATEGORY_COUNTS,
)
from services.core.data_constants import (
    CATEGORY_PROFILES,
    CATEGORY_VOCABULARIES,
    SHARED_VOCABULARY,
    SYNTHETIC_AUTHORS,
    SYNTHETIC_COMMENTS,
)
from services.numerics.rng import Rng
from services.utils.text_utils import slugify

logger = logging.getLogger(__name__)

_EPOCH = datetime(2015, 1, 1, tzinfo=timezone.utc)
_TIMESTAMP_SPAN_SECONDS = 8 * 365 * 24 * 3600


def parse_counts(spec: str) -> dict:
    """Parse ``"Car=10,Gear=10"`` into ``{"Car": 10, "Gear": 10}``."""
    counts = {}
    for item in filter(None, (part.strip() for part in spec.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"Expected CATEGORY=COUNT, got {item!r}")
        try:
            counts[name.strip()] = int(value)
        except ValueError:
            raise ValidationError(f"Count for {name.strip()!r} is not an integer") from None
    return counts


class _RecordDrafter:
    """Draws the text fields of one record."""

    def __init__(self, category: str, vocab_strength: float, rng: Rng):
        self.vocab = CATEGORY_VOCABULARIES[category]
        self.profile = CATEGORY_PROFILES[category]
        self.vocab_strength = vocab_strength
        self.rng = rng

    def _planted(self) -> bool:
        return self.rng.random() < self.vocab_strength

    def word(self, pool: str) -> str:
        source = self.vocab if self._planted() else SHARED_VOCABULARY
        return self.rng.choice(source[pool])

    def distinct_words(self, pool: str, count: int) -> List[tuple]:
        """``count`` draws without replacement, each tagged planted or shared."""
        remaining = {
            True: list(self.vocab[pool]),
            False: list(SHARED_VOCABULARY[pool]),
        }
        drawn = []
        for _ in range(count):
            planted = self._planted()
            pool_items = remaining[planted]
            drawn.append((planted, pool_items.pop(self.rng.integer(0, len(pool_items) - 1))))
        return drawn

    def parts(self) -> List[str]:
        """Distinct part phrases, with the planted ones linked per the profile."""
        low, high = self.profile["parts"]
        drawn = self.distinct_words("components", self.rng.integer(low, high))
        parts = [component for _, component in drawn]
        planted = [i for i, (is_planted, _) in enumerate(drawn) if is_planted]

        linkage = self.profile["linkage"]
        if linkage in ("pair", "clique"):
            for i in planted[:2] if linkage == "pair" else planted:
                parts[i] = f"{self.vocab['stem']} {parts[i]}"
        elif linkage == "chain":
            chain = planted[:3]
            words = [parts[i] for i in chain]
            for position, i in enumerate(chain[:-1]):
                parts[i] = f"{words[position]} {words[position + 1]}"
        return parts

    def tags(self) -> List[str]:
        low, high = self.profile["tags"]
        return [tag for _, tag in self.distinct_words("tags", self.rng.integer(low, high))]


def synth_record(
    category: str, index: int, vocab_strength: float, rng: Rng
) -> ProductRecord:
    drafter = _RecordDrafter(category, vocab_strength, rng)
    name = f"{drafter.word('adjectives')} {drafter.word('nouns')}"
    description = " ".join(
        drafter.word("description") for _ in range(rng.integer(6, 10))
    )
    parts = drafter.parts()
    tags = drafter.tags()
    comments = [rng.choice(SYNTHETIC_COMMENTS) for _ in range(rng.integer(0, 2))]
    timestamp = _EPOCH + timedelta(seconds=rng.integer(0, _TIMESTAMP_SPAN_SECONDS))
    return ProductRecord(
        id=f"{slugify(category)}-{index:05d}",
        category=category,
        name=name,
        author=rng.choice(SYNTHETIC_AUTHORS),
        description=description,
        parts=tuple(parts),
        tags=tuple(tags),
        likes=rng.integer(0, 500),
        timestamp=timestamp.isoformat(),
        comments=tuple(comments),
    )


def synth_corpus(
    seed: int,
    counts: Optional[Mapping[str, int]] = None,
    vocab_strength: float = DEFAULT_VOCAB_STRENGTH,
) -> Corpus:
    """Generate a corpus deterministically from ``seed``.

    ``counts`` defaults to the catalogue's per-category totals. Records are emitted
    category by category in catalogue order; each record has its own
    random stream, so changing one category's count never changes another
    category's records.
    """
    counts = dict(REFERENCE_CATEGORY_COUNTS if counts is None else counts)
    unknown = sorted(set(counts) - set(CATEGORIES))
    if unknown:
        raise ValidationError(
            f"Unknown categories {unknown}; expected a subset of {list(CATEGORIES)}"
        )
    for category, count in counts.items():
        if count < 1:
            raise ValidationError(f"Count for {category!r} must be positive, got {count}")
    if not 0.0 < vocab_strength <= 1.0:
        raise ValidationError(f"vocab_strength must be in (0, 1], got {vocab_strength}")

    root = Rng(seed).child("corpus")
    records = []
    for category in CATEGORIES:
        if category not in counts:
            continue
        category_rng = root.child(category)
        for index in range(counts[category]):
            records.append(
                synth_record(category, index, vocab_strength, category_rng.child(str(index)))
            )
    logger.info(f"Synthesized {len(records)} records across {len(counts)} categories")
    return Corpus.from_records(records, labels=counts.keys())
