from services.sgcnn.layers import AggregationLayer, ClassifierHead, ConvLayer
from services.sgcnn.model import Gradients, SgcnnModel
from services.sgcnn.network import (
    ForwardCache,
    Prediction,
    StaleCacheError,
    UnknownLabelError,
    backward,
    forward,
    graph_embedding,
    loss_and_gradients,
    one_hot,
    predict,
)
from services.sgcnn.operations import (
    aggregate,
    attribute_matrix,
    conv_layer_forward,
    cross_entropy,
    graph_readout,
    readout_and_classify,
)
from services.sgcnn.plan import GraphPlan

__all__ = [
    "AggregationLayer",
    "ClassifierHead",
    "ConvLayer",
    "ForwardCache",
    "Gradients",
    "GraphPlan",
    "Prediction",
    "SgcnnModel",
    "StaleCacheError",
    "UnknownLabelError",
    "aggregate",
    "attribute_matrix",
    "backward",
    "conv_layer_forward",
    "cross_entropy",
    "forward",
    "graph_embedding",
    "graph_readout",
    "loss_and_gradients",
    "one_hot",
    "predict",
    "readout_and_classify",
]
