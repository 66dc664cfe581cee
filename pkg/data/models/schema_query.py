"""Declarative schema queries for the Sample Generator.

A schema is plain data: which node kinds to extract from a product record, how
to connect them, and the embedding settings. On disk it is a single JSON
document::

    {
      "format_version": 1,
      "node_kinds": ["product", "part", "tag"],
      "edge_rules": [["product", "part", "attach_to_product"],
                     ["part", "tag", "co_occurrence"]],
      "embed_dim": 32,
      "token_min_len": 3
    }
"""

from typing import NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from services.core.constants import (
    DEFAULT_EMBED_DIM,
    DEFAULT_TOKEN_MIN_LEN,
    SCHEMA_FORMAT_VERSION,
    EdgeRule,
    NodeKind,
)


class EdgeRuleSpec(NamedTuple):
    kind_a: NodeKind
    kind_b: NodeKind
    rule: EdgeRule


class SchemaQuery(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    format_version: int = SCHEMA_FORMAT_VERSION
    node_kinds: Tuple[NodeKind, ...]
    edge_rules: Tuple[EdgeRuleSpec, ...] = ()
    embed_dim: int = Field(default=DEFAULT_EMBED_DIM, ge=2)
    token_min_len: int = Field(default=DEFAULT_TOKEN_MIN_LEN, ge=1)

    @field_validator("format_version")
    @classmethod
    def _supported_version(cls, value: int) -> int:
        if value != SCHEMA_FORMAT_VERSION:
            raise ValueError(f"unsupported schema format_version {value}")
        return value

    @field_validator("node_kinds")
    @classmethod
    def _canonical_kinds(cls, kinds: Tuple[NodeKind, ...]) -> Tuple[NodeKind, ...]:
        if NodeKind.PRODUCT not in kinds:
            raise ValueError("node_kinds must include 'product'")
        return tuple(sorted(set(kinds), key=lambda kind: kind.value))

    @model_validator(mode="after")
    def _rules_reference_selected_kinds(self) -> "SchemaQuery":
        for spec in self.edge_rules:
            for kind in (spec.kind_a, spec.kind_b):
                if kind not in self.node_kinds:
                    raise ValueError(
                        f"edge rule {spec.rule.value} uses kind {kind.value!r} "
                        "that is not in node_kinds"
                    )
            if spec.rule is EdgeRule.ATTACH_TO_PRODUCT and NodeKind.PRODUCT not in (
                spec.kind_a,
                spec.kind_b,
            ):
                raise ValueError("attach_to_product rules must name 'product'")
        return self

    def has(self, kind: NodeKind) -> bool:
        return kind in self.node_kinds


def default_schema(embed_dim: int = DEFAULT_EMBED_DIM) -> SchemaQuery:
    """Products with their parts and tags; attributes sharing a token are linked."""
    return SchemaQuery(
        node_kinds=(NodeKind.PRODUCT, NodeKind.PART, NodeKind.TAG),
        edge_rules=(
            EdgeRuleSpec(NodeKind.PRODUCT, NodeKind.PART, EdgeRule.ATTACH_TO_PRODUCT),
            EdgeRuleSpec(NodeKind.PRODUCT, NodeKind.TAG, EdgeRule.ATTACH_TO_PRODUCT),
            EdgeRuleSpec(NodeKind.PART, NodeKind.PART, EdgeRule.CO_OCCURRENCE),
            EdgeRuleSpec(NodeKind.PART, NodeKind.TAG, EdgeRule.CO_OCCURRENCE),
        ),
        embed_dim=embed_dim,
    )


def minimal_schema(embed_dim: int = DEFAULT_EMBED_DIM) -> SchemaQuery:
    """Only the product node."""
    return SchemaQuery(node_kinds=(NodeKind.PRODUCT,), embed_dim=embed_dim)
