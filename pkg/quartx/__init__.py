"""Top-level package for quartx."""

from __future__ import annotations

from importlib import import_module, metadata as _metadata

_SUBMODULES = {
    "app": "quartx.app",
    "cli": "quartx.cli",
    "core": "quartx.core",
    "parser": "quartx.parser",
}

__all__ = ["__version__", *sorted(_SUBMODULES.keys())]


def __getattr__(name: str):
    if name == "__version__":
        try:
            return _metadata.version("quartx")
        except _metadata.PackageNotFoundError:  # pragma: no cover - source checkout
            return "0.0.0"
    if name in _SUBMODULES:
        module = import_module(_SUBMODULES[name])
        globals()[name] = module
        return module
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__() -> list[str]:
    return sorted(__all__)
