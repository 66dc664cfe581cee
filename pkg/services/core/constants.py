"""Configuration and constants for the design-twin pipeline."""

from enum import Enum
from types import MappingProxyType

# File formats
CORPUS_FORMAT_VERSION = 1
GRAPHS_FORMAT_VERSION = 1
SCHEMA_FORMAT_VERSION = 1
MODEL_FORMAT_VERSION = 1
REPORT_FORMAT_VERSION = 1

# Models per category in the scraped CAD catalogue the synthetic corpus mirrors
REFERENCE_CATEGORY_COUNTS = MappingProxyType(
    {
        "Car": 2271,
        "Engine": 1597,
        "Robotic Arm": 2013,
        "Airplane": 2114,
        "Gear": 1732,
        "Wheel": 2404,
    }
)
CATEGORIES = tuple(REFERENCE_CATEGORY_COUNTS)

# Graph formation
DEFAULT_EMBED_DIM = 32
DEFAULT_TOKEN_MIN_LEN = 3
DEFAULT_VOCAB_STRENGTH = 0.9

# Neighborhood aggregation
DEFAULT_SEARCH_DEPTH = 2
DEFAULT_HOP_CAP = 8

# SGCNN layers
DEFAULT_KERNEL_SIZE = 4
DEFAULT_CHANNELS = (16, 16, 16, 16)

# Learning objective
LOG_CLAMP = 1e-12

# Training
DEFAULT_EPOCHS = 50
DEFAULT_BATCH_SIZE = 16
DEFAULT_SPLIT_FRACTION = 0.8
# Share of each class taken from the train side to select the early-stopping epoch
DEFAULT_VALIDATION_FRACTION = 0.1
DEFAULT_LEARNING_RATE = 1e-3
DEFAULT_MOMENTUM = 0.9
DEFAULT_ADAM_BETA1 = 0.9
DEFAULT_ADAM_BETA2 = 0.999
DEFAULT_ADAM_EPSILON = 1e-8

# Search
DEFAULT_TOP_N = 5


class ActivationKind(Enum):
    RELU = "relu"
    TANH = "tanh"
    SIGMOID = "sigmoid"
    IDENTITY = "identity"


class PoolKind(Enum):
    MAX = "max"
    MEAN = "mean"


class OptimizerKind(Enum):
    SGD = "sgd"
    ADAM = "adam"


class NodeKind(Enum):
    PRODUCT = "product"
    PART = "part"
    TAG = "tag"
    NAME_TOKEN = "name_token"
    DESCRIPTION_TOKEN = "description_token"
    COMMENT_TOKEN = "comment_token"


class EdgeRule(Enum):
    ATTACH_TO_PRODUCT = "attach_to_product"
    CO_OCCURRENCE = "co_occurrence"


DEFAULT_ACTIVATION = ActivationKind.RELU
DEFAULT_POOL = PoolKind.MEAN
DEFAULT_OPTIMIZER = OptimizerKind.ADAM
