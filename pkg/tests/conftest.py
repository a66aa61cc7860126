import pathlib

import numpy as np
import pytest

from tests.helpers import write_csv


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20170101)


@pytest.fixture
def corpus_csv(tmp_path: pathlib.Path) -> pathlib.Path:
    """A 20 x 6 synthetic count table plus two extra rows and one extra column."""
    generator = np.random.default_rng(7)
    counts = generator.integers(1, 30, size=(22, 7))
    header = ["doc"] + [f"w{col}" for col in range(6)] + ["CN"]
    row_ids = [f"t{row:02d}" for row in range(20)] + ["C", "AV"]

    return write_csv(
        tmp_path / "corpus.csv",
        header,
        [[row_id, *counts[idx].tolist()] for idx, row_id in enumerate(row_ids)],
    )
