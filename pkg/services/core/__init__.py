# Export core interfaces
from services.core.interfaces import FloatArray, IOptimizer, ITextEmbedder

__all__ = [
    "FloatArray",
    "IOptimizer",
    "ITextEmbedder",
]
