"""Command-line entry point.

Subcommands chain into a pipeline::

    designtwin corpus-synth --seed 42 --out corpus.jsonl
    designtwin form --corpus corpus.jsonl --out graphs.jsonl
    designtwin network --corpus corpus.jsonl --shared tag --out network.jsonl
    designtwin train --graphs graphs.jsonl --out model.json
    designtwin eval --graphs graphs.jsonl --model model.json --out metrics.json
    designtwin predict --graphs graphs.jsonl --model model.json --out predictions.jsonl
    designtwin query --graphs graphs.jsonl --model model.json --like car-00003

Exit codes: 0 success, 1 usage error, 2 input validation error, 3 numerical
failure. Every input path is checked before any work starts and every output is
written atomically.
"""

import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click
import orjson

from api.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    ContentNotFoundError,
    ErrorSanitizer,
    ProcessingError,
    UsageError,
    UserFacingError,
    ValidationError,
)
from api.serializers import (
    EvaluationSerializer,
    MetricsSerializer,
    PredictionSerializer,
    QueryResultSerializer,
    TrainReportSerializer,
)
from data.models.configs import SgcnnConfig, TrainConfig
from data.models.schema_query import SchemaQuery, default_schema
from data.repositories.corpus_repository import load_corpus, save_corpus
from data.repositories.graph_repository import load_graphs, save_graphs
from data.repositories.model_repository import load_model, save_model
from data.repositories.report_repository import (
    dump_document,
    save_document,
    save_documents,
)
from DesignTwin.settings import get_settings
from services.core.constants import DEFAULT_CHANNELS, DEFAULT_TOP_N, NodeKind
from services.core.factories import EmbedderFactory, ModelFactory
from services.formation.sample_generator import form_corpus, form_product_network
from services.formation.synthesizer import parse_counts, synth_corpus
from services.graph.property_graph import Graph
from services.numerics.rng import Rng
from services.search.similarity import similarity_search
from services.sgcnn.network import UnknownLabelError, predict
from services.training.metrics import evaluate, format_metrics_table
from services.training.splitting import stratified_split, validation_split
from services.training.trainer import NonFiniteLossError, train

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool) -> None:
    settings = get_settings()
    level = logging.DEBUG if verbose else settings.LOG_LEVEL.upper()
    logging.basicConfig(
        level=level, format=settings.LOG_FORMAT, stream=sys.stderr, force=True
    )


def _input_path(path: str) -> Path:
    resolved = get_settings().resolve(Path(path))
    if not resolved.is_file():
        raise ContentNotFoundError(
            f"Input file not found: {resolved}", details={"path": str(resolved)}
        )
    return resolved


def _output_path(path: str) -> Path:
    resolved = get_settings().resolve(Path(path))
    directory = resolved.parent
    if not directory.is_dir():
        raise ProcessingError(
            f"Output directory does not exist: {directory}", details={"path": str(resolved)}
        )
    if not os.access(directory, os.W_OK):
        raise ProcessingError(
            f"Output directory is not writable: {directory}", details={"path": str(resolved)}
        )
    return resolved


def _read_json(path: Path) -> dict:
    with open(path, "rb") as handle:
        data = orjson.loads(handle.read())
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: expected a JSON object")
    return data


def _with_overrides(base: dict, **overrides) -> dict:
    merged = dict(base)
    merged.update({key: value for key, value in overrides.items() if value is not None})
    return merged


def _parse_channels(value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--channels expects comma-separated integers, got {value!r}") from None


def _load_labeled_graphs(path: Path) -> Tuple[List[Graph], int]:
    graphs, embed_dim = load_graphs(path)
    if not graphs:
        raise ValidationError(f"{path}: contains no subgraphs")
    unlabeled = [g.graph_id for g in graphs if g.label is None]
    if unlabeled:
        raise ValidationError(
            f"{path}: {len(unlabeled)} subgraphs have no label (first: {unlabeled[0]!r})"
        )
    return graphs, int(embed_dim or graphs[0].feature_dim)


def _check_model_labels(model, graphs: Sequence[Graph]) -> None:
    unknown = [str(g.label) for g in graphs if g.label is not None and g.label not in model.labels]
    if unknown:
        raise UnknownLabelError(unknown, model.labels)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level and show progress bars.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Graph learning over product design data."""
    configure_logging(verbose)
    ctx.obj = {"verbose": verbose}


@cli.command("corpus-synth")
@click.option("--seed", type=int, default=None, help="Corpus seed (default DESIGNTWIN_DEFAULT_SEED).")
@click.option("--counts", default=None, help="Per-category counts, e.g. 'Car=10,Gear=10'.")
@click.option("--vocab-strength", type=float, default=None, help="Probability of drawing planted vocabulary.")
@click.option("--out", "out", required=True, help="Corpus file to write.")
def corpus_synth(
    seed: Optional[int],
    counts: Optional[str],
    vocab_strength: Optional[float],
    out: str,
) -> None:
    """Generate a seeded synthetic product corpus."""
    out_path = _output_path(out)
    seed = get_settings().DEFAULT_SEED if seed is None else seed
    kwargs = {} if vocab_strength is None else {"vocab_strength": vocab_strength}
    corpus = synth_corpus(seed, parse_counts(counts) if counts else None, **kwargs)
    save_corpus(corpus, out_path)
    click.echo(f"wrote {len(corpus)} records to {out_path}")


@cli.command("form")
@click.option("--corpus", "corpus_file", required=True, help="Corpus file to read.")
@click.option("--schema", "schema_file", default=None, help="Schema JSON (default: products, parts and tags).")
@click.option("--embed-dim", type=int, default=None, help="Override the schema's embedding dimension.")
@click.option("--out", "out", required=True, help="Subgraph file to write.")
def form(
    corpus_file: str, schema_file: Optional[str], embed_dim: Optional[int], out: str
) -> None:
    """Form one labeled subgraph per product record."""
    corpus_path = _input_path(corpus_file)
    schema_path = _input_path(schema_file) if schema_file else None
    out_path = _output_path(out)

    base = _read_json(schema_path) if schema_path else default_schema().model_dump(mode="json")
    schema = SchemaQuery.model_validate(_with_overrides(base, embed_dim=embed_dim))
    corpus = load_corpus(corpus_path)
    graphs = form_corpus(corpus, schema, EmbedderFactory.create_embedder(schema.embed_dim))
    save_graphs(graphs, out_path)
    click.echo(f"wrote {len(graphs)} subgraphs to {out_path}")


@cli.command("network")
@click.option("--corpus", "corpus_file", required=True, help="Corpus file to read.")
@click.option("--shared", type=click.Choice(["tag", "part"]), default="tag", show_default=True, help="Record field that links two products.")
@click.option("--embed-dim", type=int, default=None, help="Embedding dimension of the product features.")
@click.option("--out", "out", required=True, help="Graph file to write.")
def network(corpus_file: str, shared: str, embed_dim: Optional[int], out: str) -> None:
    """Form one corpus-level graph linking products that share a tag or part."""
    corpus_path = _input_path(corpus_file)
    out_path = _output_path(out)

    schema = SchemaQuery.model_validate(
        _with_overrides(default_schema().model_dump(mode="json"), embed_dim=embed_dim)
    )
    corpus = load_corpus(corpus_path)
    graph = form_product_network(
        corpus.records,
        schema,
        NodeKind(shared),
        EmbedderFactory.create_embedder(schema.embed_dim),
    )
    save_graphs([graph], out_path)
    click.echo(
        f"wrote a {graph.num_nodes}-product network with {len(graph.edges())} links to {out_path}"
    )


@cli.command("train")
@click.option("--graphs", "graphs_file", required=True, help="Subgraph file to train on.")
@click.option("--out", "out", required=True, help="Model file to write.")
@click.option("--report", "report_file", default=None, help="Train report JSON (default: <out>.report.json).")
@click.option("--config", "config_file", default=None, help="TrainConfig JSON; flags override it.")
@click.option("--model-config", "model_config_file", default=None, help="SgcnnConfig JSON; flags override it.")
@click.option("--seed", type=int, default=None, help="Split, shuffle and initialization seed.")
@click.option("--epochs", type=int, default=None)
@click.option("--batch-size", type=int, default=None)
@click.option("--optimizer", type=click.Choice(["sgd", "adam"]), default=None)
@click.option("--lr", "learning_rate", type=float, default=None, help="Learning rate.")
@click.option("--split", "split_fraction", type=float, default=None, help="Train fraction per class.")
@click.option("--patience", "early_stop_patience", type=int, default=None, help="Early-stopping patience in epochs.")
@click.option("--validation", "validation_fraction", type=float, default=None, help="Per-class share of the train side that picks the early-stopping epoch.")
@click.option("--layers", type=int, default=None, help="Number of convolution layers.")
@click.option("--channels", default=None, help="Comma-separated channels per layer.")
@click.option("--kernel-size", type=int, default=None, help="Pooled size k of every layer.")
@click.option("--depth", "search_depth", type=int, default=None, help="Aggregation search depth d.")
@click.option("--activation", type=click.Choice(["relu", "tanh", "sigmoid", "identity"]), default=None)
@click.option("--pool", "aggregation_pool", type=click.Choice(["mean", "max"]), default=None)
@click.pass_context
def train_command(
    ctx: click.Context,
    graphs_file: str,
    out: str,
    report_file: Optional[str],
    config_file: Optional[str],
    model_config_file: Optional[str],
    seed: Optional[int],
    layers: Optional[int],
    channels: Optional[str],
    activation: Optional[str],
    **flags,
) -> None:
    """Train an SGCNN on a stratified split and report held-out metrics."""
    graphs_path = _input_path(graphs_file)
    config_path = _input_path(config_file) if config_file else None
    model_config_path = _input_path(model_config_file) if model_config_file else None
    out_path = _output_path(out)
    report_path = _output_path(report_file or f"{out}.report.json")

    seed = get_settings().DEFAULT_SEED if seed is None else seed
    layer_channels = _parse_channels(channels)
    if layers is not None and layer_channels is None:
        layer_channels = (DEFAULT_CHANNELS[0],) * layers
    elif layers is not None and len(layer_channels or ()) != layers:
        raise UsageError(f"--layers {layers} disagrees with --channels {channels!r}")

    train_keys = (
        "epochs",
        "batch_size",
        "optimizer",
        "learning_rate",
        "split_fraction",
        "validation_fraction",
        "early_stop_patience",
    )
    train_flags = {key: flags.pop(key) for key in train_keys}
    train_config = TrainConfig.model_validate(
        _with_overrides(
            _read_json(config_path) if config_path else {}, seed=seed, **train_flags
        )
    )

    graphs, embed_dim = _load_labeled_graphs(graphs_path)
    labels = sorted({str(g.label) for g in graphs})
    model_config = SgcnnConfig.model_validate(
        _with_overrides(
            _read_json(model_config_path) if model_config_path else {},
            embed_dim=embed_dim,
            labels=labels,
            channels=layer_channels,
            sigma=activation,
            phi=activation,
            **flags,
        )
    )
    if model_config.embed_dim != embed_dim:
        raise ValidationError(f"Model embed_dim {model_config.embed_dim} != graph features {embed_dim}")

    train_set, test_set = stratified_split(graphs, train_config.split_fraction, train_config.seed)
    # Early stopping picks its epoch on validation data; the test split only monitors.
    if train_config.early_stop_patience is not None:
        fit_set, held_out = validation_split(
            train_set, train_config.validation_fraction, train_config.seed
        )
        held_out_set = "validation"
    else:
        fit_set, held_out, held_out_set = train_set, test_set, "test"
    split_sizes = {"fit": len(fit_set), held_out_set: len(held_out), "test": len(test_set)}

    model = ModelFactory.create_model(model_config, Rng(train_config.seed))
    try:
        report = train(model, fit_set, train_config, held_out=held_out, progress=ctx.obj["verbose"])
    except NonFiniteLossError as exc:
        save_document(
            TrainReportSerializer.from_report(
                exc.report, out_path.name, None, held_out_set, split_sizes
            ),
            report_path,
        )
        raise

    final_test = evaluate(model, test_set) if test_set else None
    save_model(model, out_path)
    save_document(
        TrainReportSerializer.from_report(
            report, out_path.name, final_test, held_out_set, split_sizes
        ),
        report_path,
    )
    if final_test is not None:
        click.echo(format_metrics_table(final_test))


@cli.command("eval")
@click.option("--graphs", "graphs_file", required=True, help="Subgraph file to evaluate on.")
@click.option("--model", "model_file", required=True, help="Model file.")
@click.option("--out", "out", default=None, help="Metrics JSON to write.")
def eval_command(graphs_file: str, model_file: str, out: Optional[str]) -> None:
    """Evaluate a trained model and print the metrics table."""
    graphs_path = _input_path(graphs_file)
    model_path = _input_path(model_file)
    out_path = _output_path(out) if out else None

    model = load_model(model_path)
    graphs, _ = _load_labeled_graphs(graphs_path)
    _check_model_labels(model, graphs)
    metrics = evaluate(model, graphs)
    click.echo(format_metrics_table(metrics))
    if out_path is not None:
        save_document(
            EvaluationSerializer(
                graphs_file=graphs_path.name,
                checkpoint=model_path.name,
                metrics=MetricsSerializer.from_metrics(metrics),
            ),
            out_path,
        )


@cli.command("predict")
@click.option("--graphs", "graphs_file", required=True, help="Subgraph file to classify.")
@click.option("--model", "model_file", required=True, help="Model file.")
@click.option("--out", "out", required=True, help="Predictions JSON-lines file to write.")
def predict_command(graphs_file: str, model_file: str, out: str) -> None:
    """Write one prediction per subgraph."""
    graphs_path = _input_path(graphs_file)
    model_path = _input_path(model_file)
    out_path = _output_path(out)

    model = load_model(model_path)
    graphs, _ = load_graphs(graphs_path)
    _check_model_labels(model, graphs)
    documents = [
        PredictionSerializer.from_prediction(g.graph_id, g.label, predict(model, g), model.labels)
        for g in graphs
    ]
    save_documents(documents, out_path)
    click.echo(f"wrote {len(documents)} predictions to {out_path}")


@cli.command("query")
@click.option("--graphs", "graphs_file", required=True, help="Subgraph file to search.")
@click.option("--model", "model_file", required=True, help="Model file.")
@click.option("--like", required=True, help="Anchor product id.")
@click.option("--top-n", type=int, default=DEFAULT_TOP_N, show_default=True)
@click.option("--out", "out", default=None, help="Query result JSON to write.")
def query(
    graphs_file: str, model_file: str, like: str, top_n: int, out: Optional[str]
) -> None:
    """Find the products most similar to --like in readout space."""
    graphs_path = _input_path(graphs_file)
    model_path = _input_path(model_file)
    out_path = _output_path(out) if out else None

    model = load_model(model_path)
    graphs, _ = load_graphs(graphs_path)
    document = QueryResultSerializer.from_result(similarity_search(model, graphs, like, top_n))
    click.echo(dump_document(document).decode("utf-8"), nl=False)
    if out_path is not None:
        save_document(document, out_path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and map every failure to an exit code."""
    try:
        cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="designtwin",
            standalone_mode=False,
        )
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("error: aborted", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except UserFacingError as exc:
        click.echo(f"error: {exc.user_message}", err=True)
        return exc.exit_code
    except Exception as exc:  # noqa: BLE001
        error = ErrorSanitizer.sanitize_exception(exc)
        logger.debug("Unhandled exception", exc_info=exc)
        click.echo(f"error: {error.user_message}", err=True)
        return error.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
