"""
Shared pytest configuration.

Puts the repository root on sys.path so the top-level packages import
without installation, and clears environment overrides that would change
CLI defaults.
"""

import os
import sys

import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

ENV_OVERRIDES = ("RECORDS_CAP", "RECORDS_TABLE_CAP", "RECORDS_THREADS", "RECORDS_FORMAT", "LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Run every test against the built-in defaults."""
    from combinum import TABLES

    for name in ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("app.config.load_dotenv", lambda *args, **kwargs: False)
    monkeypatch.setattr(TABLES, "cap", TABLES.cap)
