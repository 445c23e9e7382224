"""Resource caps shared by every enumeration in the package."""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace
from typing import Iterator

DEFAULT_MAX_ORDER = 512
DEFAULT_MAX_IDEALS = 20000
DEFAULT_MAX_SUBRINGS = 50000


class ResourceLimitError(RuntimeError):
    """An operation would exceed one of the configured caps."""

    def __init__(self, resource: str, limit: int, needed: int | None = None):
        self.resource = resource
        self.limit = limit
        self.needed = needed
        msg = f"{resource} cap of {limit} exceeded"
        if needed is not None:
            msg += f" (needed {needed})"
        super().__init__(msg)


@dataclass(frozen=True)
class Limits:
    max_order: int = DEFAULT_MAX_ORDER
    max_ideals: int = DEFAULT_MAX_IDEALS
    max_subrings: int = DEFAULT_MAX_SUBRINGS


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar("finring_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides: int | None) -> Iterator[Limits]:
    """Temporarily override caps, e.g. ``with limits(max_order=1024): ...``."""
    new = replace(current(), **{k: v for k, v in overrides.items() if v is not None})
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)


def check_order(order: int, what: str = "ring order") -> None:
    cap = current().max_order
    if order > cap:
        raise ResourceLimitError(what, cap, order)
