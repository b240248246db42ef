"""Monitoring configuration."""

from typing import Optional

from pydantic import Field, model_validator

from ..core.models.base_models import BaseModel
from .monitor_types import LogLevel


class MonitoringConfig(BaseModel):
    """Configuration for logging and the optional Logfire export."""

    service_name: str = Field("helix-lab", description="Name reported to Logfire")
    environment: str = Field("development", description="Deployment environment")
    min_log_level: LogLevel = Field(
        LogLevel.WARNING, description="Minimum level of the stderr handler"
    )
    logfire_token: Optional[str] = Field(
        None, description="Logfire write token; export is off without it"
    )
    slow_operation_ms: float = Field(
        1000.0, description="Operations slower than this are logged at info level"
    )

    @model_validator(mode="after")
    def validate_config(self) -> "MonitoringConfig":
        if not self.service_name.strip():
            raise ValueError("service_name must not be empty")
        if self.slow_operation_ms < 0:
            raise ValueError("slow_operation_ms must be non-negative")
        return self

    @property
    def logfire_enabled(self) -> bool:
        return bool(self.logfire_token)
