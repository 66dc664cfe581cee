from data.models.configs import SgcnnConfig, TrainConfig
from data.models.product_record import Corpus, ProductRecord, UnknownCategoryError
from data.models.schema_query import (
    EdgeRuleSpec,
    SchemaQuery,
    default_schema,
    minimal_schema,
)

__all__ = [
    "Corpus",
    "EdgeRuleSpec",
    "ProductRecord",
    "SchemaQuery",
    "SgcnnConfig",
    "TrainConfig",
    "UnknownCategoryError",
    "default_schema",
    "minimal_schema",
]
