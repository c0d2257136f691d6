"""Tests for enumeration limits and environment overrides."""

from __future__ import annotations

import pytest

from quartx.core.config import ALLOW_LARGE_ENV, WORKERS_ENV, EnumerationConfig
from quartx.core.errors import ConfigError


def test_defaults():
    config = EnumerationConfig()
    assert config.restricted_cap == 8
    assert config.full_direct_cap == 4
    assert config.effective_unordered_cap() == 7
    assert config.workers == 1


def test_from_env_reads_overrides():
    config = EnumerationConfig.from_env({WORKERS_ENV: "3", ALLOW_LARGE_ENV: "yes"})
    assert config.workers == 3
    assert config.allow_large is True
    assert config.effective_unordered_cap() == 8


def test_from_env_defaults_when_unset(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    monkeypatch.delenv(ALLOW_LARGE_ENV, raising=False)
    assert EnumerationConfig.from_env() == EnumerationConfig()


@pytest.mark.parametrize(
    "environ",
    [
        {WORKERS_ENV: "many"},
        {WORKERS_ENV: "0"},
        {ALLOW_LARGE_ENV: "maybe"},
    ],
)
def test_from_env_rejects_invalid_values(environ):
    with pytest.raises(ConfigError):
        EnumerationConfig.from_env(environ)


def test_with_workers_returns_copy():
    config = EnumerationConfig()
    assert config.with_workers(4).workers == 4
    assert config.workers == 1
