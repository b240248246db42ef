"""
Monitoring setup.

Configures the standard logging handler and, when a Logfire token is present
in the environment, the Logfire SDK.
"""

import logging
import os
from typing import Mapping, Optional

import logfire

from ..core.constants.defaults import LOGFIRE_TOKEN_ENV_VAR
from .monitor_config import MonitoringConfig
from .monitor_types import LogLevel

logger = logging.getLogger(__name__)

_active_config: Optional[MonitoringConfig] = None


def setup_from_env(
    service_name: str = "helix-lab",
    env_var: str = LOGFIRE_TOKEN_ENV_VAR,
    min_log_level: LogLevel = LogLevel.WARNING,
    environ: Optional[Mapping[str, str]] = None,
) -> MonitoringConfig:
    """
    Set up logging from environment variables.

    Args:
        service_name: Service name reported to Logfire
        env_var: Environment variable holding the Logfire token
        min_log_level: Minimum level of the stderr handler
        environ: Environment mapping, defaults to ``os.environ``

    Returns:
        The active monitoring configuration
    """
    global _active_config

    env = os.environ if environ is None else environ
    config = MonitoringConfig(
        service_name=service_name,
        environment=env.get("ENVIRONMENT", "development"),
        min_log_level=min_log_level,
        logfire_token=env.get(env_var) or None,
    )

    root = logging.getLogger("helix_lab")
    level = logging.DEBUG if config.logfire_enabled else config.min_log_level.numeric
    root.setLevel(level)
    if not any(getattr(h, "_helix_handler", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setLevel(config.min_log_level.numeric)
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        handler._helix_handler = True  # type: ignore[attr-defined]
        root.addHandler(handler)

    if config.logfire_enabled:
        try:
            logfire.configure(
                token=config.logfire_token,
                service_name=config.service_name,
                send_to_logfire="if-token-present",
                console=False,
            )
            root.addHandler(logfire.LogfireLoggingHandler())
            logger.info("Logfire export enabled for %s", config.service_name)
        except Exception as e:
            logger.error(f"Logfire configuration error: {e}")
            config = config.model_copy(update={"logfire_token": None})
    else:
        logger.debug("%s not set, Logfire export disabled", env_var)

    _active_config = config
    return config


def active_config() -> Optional[MonitoringConfig]:
    return _active_config


def logfire_active() -> bool:
    return _active_config is not None and _active_config.logfire_enabled


def reset_monitoring() -> None:
    """Forget the active configuration (used by tests)."""
    global _active_config
    _active_config = None
