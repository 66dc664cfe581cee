"""Stratified train/test and train/validation splitting."""

import logging
import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from api.exceptions import ValidationError
from services.graph.property_graph import Graph
from services.numerics.rng import Rng

logger = logging.getLogger(__name__)


def stratified_split(
    samples: Sequence[Graph], fraction: float, seed: int, stream: str = "split"
) -> Tuple[List[Graph], List[Graph]]:
    """Split each class at ``fraction``, flooring the train side.

    Classes are visited in label order and shuffled with their own stream, then
    both sides are shuffled once more so batches mix classes.
    ``stream`` names the random stream, so splits drawn for different purposes
    from one seed are independent.
    """
    if not 0.0 < fraction < 1.0:
        raise ValidationError(f"Split fraction must be in (0, 1), got {fraction}")

    by_label: Dict[str, List[Graph]] = defaultdict(list)
    for sample in samples:
        if sample.label is None:
            raise ValidationError(f"Sample {sample.graph_id!r} has no label")
        by_label[sample.label].append(sample)

    small = sorted(label for label, group in by_label.items() if len(group) < 2)
    if small:
        raise ValidationError(
            f"Classes {small} have fewer than 2 samples and cannot be split",
            details={"classes": small},
        )

    rng = Rng(seed).child(stream)
    train: List[Graph] = []
    test: List[Graph] = []
    for label in sorted(by_label):
        group = by_label[label]
        order = rng.child(label).permutation(len(group))
        cut = math.floor(len(group) * fraction + 1e-9)
        train.extend(group[i] for i in order[:cut])
        test.extend(group[i] for i in order[cut:])
        logger.debug(f"Split {label!r}: {cut} train / {len(group) - cut} held out")

    train = [train[i] for i in rng.child("train").permutation(len(train))]
    test = [test[i] for i in rng.child("test").permutation(len(test))]
    logger.info(f"Stratified {stream}: {len(train)} train / {len(test)} held out")
    return train, test


def validation_split(
    train_set: Sequence[Graph], fraction: float, seed: int
) -> Tuple[List[Graph], List[Graph]]:
    """Hold ``fraction`` of each class out of ``train_set`` for model selection.

    Returns ``(fit, validation)``; each class contributes the ceiling of its
    share to the validation side.
    """
    if not 0.0 < fraction < 1.0:
        raise ValidationError(f"Validation fraction must be in (0, 1), got {fraction}")
    return stratified_split(train_set, 1.0 - fraction, seed, stream="validation")
