"""Championship clinch and winless-champion simulation."""

import os
from pathlib import Path

from ._clinchsim import (
    DEFAULT_SEED,
    DataError,
    ParseError,
    data_dir,
    m2_distribution,
    normalized_scores,
    risk_averse_transform,
    rule_scores,
    season_metrics,
    set_data_dir,
    simulate,
    standings,
    sweep,
    validate_dataset,
)

_packaged = Path(__file__).with_name("data")
if "CLINCHSIM_DATA_DIR" not in os.environ and _packaged.is_dir():
    set_data_dir(_packaged)

__all__ = [
    "DEFAULT_SEED",
    "DataError",
    "ParseError",
    "data_dir",
    "m2_distribution",
    "normalized_scores",
    "risk_averse_transform",
    "rule_scores",
    "season_metrics",
    "set_data_dir",
    "simulate",
    "standings",
    "sweep",
    "validate_dataset",
]
