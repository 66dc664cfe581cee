"""Tests for the model file."""

import base64

import numpy as np
import orjson
import pytest

from api.exceptions import ValidationError
from data.repositories.model_repository import (
    ModelFileError,
    decode_array,
    encode_array,
    load_model,
    model_to_bytes,
    save_model,
)
from services.sgcnn.network import forward
from tests.helpers import random_graph, small_model


class TestArrayEncoding:
    """Test the base64 array codec."""

    def test_bit_exact(self):
        """Test that awkward floats survive unchanged."""
        array = np.array([[0.1, -0.0], [1e-300, np.pi]])
        assert decode_array(encode_array(array)).tobytes() == array.tobytes()

    def test_wrong_size(self):
        """Test that the data must fill the shape."""
        entry = encode_array(np.zeros(3))
        entry["shape"] = [4]
        with pytest.raises(ValueError):
            decode_array(entry)

    def test_wrong_dtype(self):
        """Test that only little-endian float64 is accepted."""
        entry = encode_array(np.zeros(2))
        entry["dtype"] = "<f4"
        with pytest.raises(ValueError):
            decode_array(entry)


class TestModelFile:
    """Test saving and loading models."""

    def test_round_trip(self, tmp_path):
        """Test identical parameters, config and predictions after reload."""
        model = small_model(seed=4, channels=(2, 3, 2))
        path = tmp_path / "model.json"
        save_model(model, path)
        loaded = load_model(path)
        generator = np.random.default_rng(0)

        assert loaded.config == model.config
        for name, array in model.parameters().items():
            assert np.array_equal(loaded.parameters()[name], array)
        for _ in range(100):
            g = random_graph(generator, int(generator.integers(1, 9)), 3)
            assert np.array_equal(forward(loaded, g)[0], forward(model, g)[0])

    def test_document_layout(self):
        """Test the top-level keys and parameter names."""
        document = orjson.loads(model_to_bytes(small_model()))

        assert document["kind"] == "sgcnn-model"
        assert document["format_version"] == 1
        assert set(document["parameters"]) == {
            "aggregation.weights",
            "aggregation.bias",
            "conv.0.kernels",
            "conv.0.biases",
            "conv.1.kernels",
            "conv.1.biases",
            "head.weight",
            "head.bias",
        }

    def test_missing_parameter(self, tmp_path):
        """Test that every parameter must be present."""
        document = orjson.loads(model_to_bytes(small_model()))
        del document["parameters"]["head.bias"]
        path = tmp_path / "model.json"
        path.write_bytes(orjson.dumps(document))

        with pytest.raises(ValidationError, match="head.bias"):
            load_model(path)

    def test_corrupt_base64(self, tmp_path):
        """Test that undecodable parameter data names the parameter."""
        document = orjson.loads(model_to_bytes(small_model()))
        document["parameters"]["head.weight"]["data"] = "!!!"
        path = tmp_path / "model.json"
        path.write_bytes(orjson.dumps(document))

        with pytest.raises(ModelFileError, match="head.weight"):
            load_model(path)

    def test_bad_config(self, tmp_path):
        """Test that the embedded config is validated."""
        document = orjson.loads(model_to_bytes(small_model()))
        document["config"]["labels"] = ["only"]
        path = tmp_path / "model.json"
        path.write_bytes(orjson.dumps(document))

        with pytest.raises(ModelFileError, match="labels"):
            load_model(path)

    @pytest.mark.parametrize("content", [b"{", b"[]", b'{"kind": "sgcnn-model"}'])
    def test_not_a_model(self, tmp_path, content):
        """Test malformed and foreign documents."""
        path = tmp_path / "model.json"
        path.write_bytes(content)
        with pytest.raises(ModelFileError):
            load_model(path)

    def test_encoding_is_base64_of_float64(self):
        """Test the raw payload of one parameter."""
        model = small_model()
        entry = orjson.loads(model_to_bytes(model))["parameters"]["head.bias"]
        raw = base64.b64decode(entry["data"])
        assert np.array_equal(np.frombuffer(raw, dtype="<f8"), model.head.bias)
