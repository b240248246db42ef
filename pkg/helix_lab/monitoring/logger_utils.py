"""Utilities for timing and tracing laboratory operations."""

import functools
import logging
import time
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, Optional, TypeVar, cast

import logfire

from .monitor_types import ComponentName
from .setup import active_config, logfire_active

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


class SpanContext:
    """Collects attributes while a tracked operation runs."""

    def __init__(self, attributes: Dict[str, Any]):
        self.attributes = dict(attributes)

    def add_data(self, data: Dict[str, Any]) -> None:
        self.attributes.update(data)


@contextmanager
def track_performance(
    operation_name: str,
    component: ComponentName,
    **extra_data: Any,
) -> Iterator[SpanContext]:
    """
    Context manager to track the duration of a block of code.

    Durations go to the log only; they never reach reports.

    Example:
        ```python
        with track_performance("chromatic_number", ComponentName.CHROMATICS) as span:
            span.add_data({"order": g.order})
        ```
    """
    span_context = SpanContext({k: _safe_serialize(v) for k, v in extra_data.items()})
    start_time = time.perf_counter()
    span = (
        logfire.span(
            operation_name, component=component.value, **span_context.attributes
        )
        if logfire_active()
        else None
    )
    if span is not None:
        span.__enter__()
    try:
        yield span_context
    except Exception as e:
        duration_ms = (time.perf_counter() - start_time) * 1000
        logger.debug(
            "%s.%s failed after %.1f ms: %s",
            component.value,
            operation_name,
            duration_ms,
            type(e).__name__,
        )
        if span is not None:
            span.set_attributes(
                {**span_context.attributes, "error_type": type(e).__name__}
            )
            span.__exit__(type(e), e, e.__traceback__)
        raise
    duration_ms = (time.perf_counter() - start_time) * 1000
    config = active_config()
    slow = config is not None and duration_ms >= config.slow_operation_ms
    logger.log(
        logging.INFO if slow else logging.DEBUG,
        "%s.%s took %.1f ms %s",
        component.value,
        operation_name,
        duration_ms,
        span_context.attributes,
    )
    if span is not None:
        span.set_attributes(span_context.attributes)
        span.__exit__(None, None, None)


def with_monitoring(
    component: ComponentName, operation: Optional[str] = None
) -> Callable[[F], F]:
    """Decorator wrapping a function call in ``track_performance``."""

    def decorator(func: F) -> F:
        name = operation or func.__name__

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            with track_performance(name, component, **_safe_kwargs(kwargs)):
                return func(*args, **kwargs)

        return cast(F, wrapper)

    return decorator


def _safe_kwargs(kwargs: Dict[str, Any]) -> Dict[str, Any]:
    return {key: _safe_serialize(value) for key, value in kwargs.items()}


def _safe_serialize(value: Any) -> Any:
    """Reduce a value to something cheap to log."""
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if hasattr(value, "describe"):
        return value.describe()
    if isinstance(value, (list, tuple)):
        return f"[{type(value).__name__}:{len(value)}]"
    if isinstance(value, dict):
        return f"[dict:{len(value)}]"
    return f"[{type(value).__name__}]"
