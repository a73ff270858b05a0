"""Guard limits for the exhaustive enumerators.

Defaults can be overridden through the ``SKEWHOOK_GUARDS`` environment
variable, e.g. ``SKEWHOOK_GUARDS="syt_enum=20,pleasant_cells=18"``, or
programmatically with :func:`set_guard` / :func:`guard_overrides`.
"""

import contextlib
import os

from .errors import GuardError, ValidationError

ENV_VAR = "SKEWHOOK_GUARDS"

DEFAULT_GUARDS: dict[str, int] = {
    # cells of a skew shape for materializing every SYT
    "syt_enum": 18,
    # cells of a skew shape for the memoized SYT count
    "syt_count": 64,
    # cells of lambda for materializing pleasant diagrams
    "pleasant_cells": 16,
    # cells of a skew shape for the linear-extension maj polynomial
    "maj_cells": 12,
    # number of tableaux an enumerator may produce
    "enum_results": 2_000_000,
    # matrix area for the Greene chain statistics
    "greene_area": 64,
    # truncation degree of series
    "series_degree": 200,
}

_overrides: dict[str, int] = {}


def _parse(text: str) -> dict[str, int]:
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in DEFAULT_GUARDS:
            raise ValidationError(f"bad guard override {item!r}")
        try:
            out[name] = int(value)
        except ValueError:
            raise ValidationError(f"bad guard value in {item!r}") from None
    return out


def env_overrides() -> dict[str, int]:
    """Guard values from the environment; a malformed value is a validation error."""
    return _parse(os.environ.get(ENV_VAR, ""))


def get_guard(name: str) -> int:
    if name in _overrides:
        return _overrides[name]
    env = env_overrides()
    if name in env:
        return env[name]
    return DEFAULT_GUARDS[name]


def set_guard(name: str, value: int) -> None:
    if name not in DEFAULT_GUARDS:
        raise ValidationError(f"unknown guard {name!r}")
    _overrides[name] = int(value)


def apply_overrides(text: str) -> None:
    for name, value in _parse(text).items():
        set_guard(name, value)


@contextlib.contextmanager
def guard_overrides(**values: int):
    saved = dict(_overrides)
    try:
        for name, value in values.items():
            set_guard(name, value)
        yield
    finally:
        _overrides.clear()
        _overrides.update(saved)


def check_guard(name: str, size: int) -> None:
    limit = get_guard(name)
    if size > limit:
        raise GuardError(name, limit, size)
