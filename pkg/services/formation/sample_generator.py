"""The Sample Generator: one labeled subgraph per product record.

The schema decides which attributes of a record become nodes. Every node key is
``"<kind>:<value>"`` (``"product:<id>"`` for the product), so equal attribute
values collapse into one node and canonical ordering groups nodes by kind.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from api.exceptions import ValidationError
from data.models.product_record import Corpus, ProductRecord
from data.models.schema_query import SchemaQuery
from services.core.constants import EdgeRule, NodeKind
from services.core.interfaces import ITextEmbedder
from services.graph.property_graph import Graph, build_graph
from services.utils.text_utils import tokenize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Attribute:
    key: str
    kind: NodeKind
    text: str
    tokens: frozenset


def _default_embedder(q: SchemaQuery) -> ITextEmbedder:
    from services.core.factories import EmbedderFactory

    return EmbedderFactory.create_embedder(q.embed_dim)


def product_text(rec: ProductRecord) -> str:
    return f"{rec.name} {rec.description}".strip()


def _distinct(values: Iterable[str]) -> List[str]:
    return sorted({value.strip() for value in values if value.strip()})


def _attributes(rec: ProductRecord, q: SchemaQuery) -> List[_Attribute]:
    text_values: Dict[NodeKind, List[str]] = {}
    if q.has(NodeKind.PART):
        text_values[NodeKind.PART] = _distinct(rec.parts)
    if q.has(NodeKind.TAG):
        text_values[NodeKind.TAG] = _distinct(rec.tags)

    token_sources = {
        NodeKind.NAME_TOKEN: [rec.name],
        NodeKind.DESCRIPTION_TOKEN: [rec.description],
        NodeKind.COMMENT_TOKEN: list(rec.comments),
    }
    for kind, sources in token_sources.items():
        if q.has(kind):
            tokens = [t for text in sources for t in tokenize(text)]
            text_values[kind] = sorted(
                {t for t in tokens if len(t) >= q.token_min_len}
            )

    return [
        _Attribute(
            key=f"{kind.value}:{value}",
            kind=kind,
            text=value,
            tokens=frozenset(tokenize(value)),
        )
        for kind, values in text_values.items()
        for value in values
    ]


def form_subgraph(
    rec: ProductRecord, q: SchemaQuery, embedder: Optional[ITextEmbedder] = None
) -> Graph:
    """Build the labeled subgraph of one record under schema ``q``.

    ``attach_to_product`` links every node of the non-product kind to the
    product node. ``co_occurrence`` links two distinct nodes of the named kinds
    when their values share a token.
    """
    embedder = embedder or _default_embedder(q)
    product = _Attribute(
        key=f"{NodeKind.PRODUCT.value}:{rec.id}",
        kind=NodeKind.PRODUCT,
        text=product_text(rec),
        tokens=frozenset(tokenize(product_text(rec))),
    )
    nodes = [product] + _attributes(rec, q)

    by_kind: Dict[NodeKind, List[_Attribute]] = {}
    for node in nodes:
        by_kind.setdefault(node.kind, []).append(node)

    edges: Set[Tuple[str, str]] = set()
    for spec in q.edge_rules:
        if spec.rule is EdgeRule.ATTACH_TO_PRODUCT:
            other = spec.kind_b if spec.kind_a is NodeKind.PRODUCT else spec.kind_a
            if other is NodeKind.PRODUCT:
                continue
            for node in by_kind.get(other, []):
                edges.add(_ordered(product.key, node.key))
        else:
            for a in by_kind.get(spec.kind_a, []):
                for b in by_kind.get(spec.kind_b, []):
                    if a.key != b.key and a.tokens & b.tokens:
                        edges.add(_ordered(a.key, b.key))

    node_specs = [(n.key, n.kind.value, embedder.embed(n.text)) for n in nodes]
    return build_graph(node_specs, sorted(edges), label=rec.category, graph_id=rec.id)


def form_corpus(
    corpus: Corpus, q: SchemaQuery, embedder: Optional[ITextEmbedder] = None
) -> List[Graph]:
    """Form every record's subgraph, in corpus order."""
    embedder = embedder or _default_embedder(q)
    graphs = [form_subgraph(rec, q, embedder) for rec in corpus.records]
    logger.info(f"Formed {len(graphs)} subgraphs from {len(corpus)} records")
    return graphs


def form_product_network(
    records: Sequence[ProductRecord],
    q: SchemaQuery,
    shared_kind: NodeKind = NodeKind.TAG,
    embedder: Optional[ITextEmbedder] = None,
) -> Graph:
    """Corpus-level graph: one node per product, linked when they share an entry.

    ``shared_kind`` selects the record field compared (tags or parts).
    """
    if shared_kind not in (NodeKind.TAG, NodeKind.PART):
        raise ValidationError(
            f"Products can only be linked through tags or parts, not {shared_kind.value}"
        )
    embedder = embedder or _default_embedder(q)
    entries = {
        rec.id: set(_distinct(rec.tags if shared_kind is NodeKind.TAG else rec.parts))
        for rec in records
    }
    nodes = [
        (
            f"{NodeKind.PRODUCT.value}:{rec.id}",
            NodeKind.PRODUCT.value,
            embedder.embed(product_text(rec)),
        )
        for rec in records
    ]
    edges = []
    for i, a in enumerate(records):
        for b in records[i + 1 :]:
            if entries[a.id] & entries[b.id]:
                edges.append((f"product:{a.id}", f"product:{b.id}"))
    return build_graph(nodes, edges, graph_id="product-network")


def _ordered(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a < b else (b, a)
