from services.search.similarity import (
    Neighbor,
    QueryResult,
    cosine_similarities,
    similarity_search,
)

__all__ = ["Neighbor", "QueryResult", "cosine_similarities", "similarity_search"]
