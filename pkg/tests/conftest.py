"""Shared fixtures for the gt_gromov_width test suite."""

import numpy as np
import pytest

from gt_gromov_width.config import Config

# Eigensolver tolerance for tests that compare realized patterns at 1e-8.
TIGHT_TOL = 1e-12


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def tight_tol():
    return TIGHT_TOL


@pytest.fixture
def db_url(tmp_path, monkeypatch):
    url = f"sqlite:///{tmp_path / 'runs.db'}"
    monkeypatch.setattr(Config, "DATABASE_URL", url)
    return url
