"""Configuration management for the cqsres toolkit."""

from typing import Literal, Optional

from pydantic import BaseModel, Field, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

ColorMode = Literal["auto", "always", "never"]
OutputFormat = Literal["text", "json", "dot"]


class OutputConfig(BaseModel):
    """Report rendering configuration."""
    color: ColorMode = Field(default="auto", description="Colour policy for terminal output")
    default_format: OutputFormat = Field(default="text", description="Format used when --format is omitted")


class SweepConfig(BaseModel):
    """Batch cross-validation configuration."""
    jobs: PositiveInt = Field(default=1, description="Worker processes used by the sweep driver")
    seed: int = Field(default=20240417, description="Seed for randomized braid-relation checks")
    braid_checks: PositiveInt = Field(default=500, description="Number of random braid-relation triples")


class ObservabilityConfig(BaseModel):
    """Observability and telemetry configuration."""
    enable_telemetry: bool = Field(default=False, description="Enable OpenTelemetry spans and counters")
    service_name: str = Field(default="cqsres", description="Service name for telemetry")
    service_version: str = Field(default="1.0.0", description="Service version")
    console_exporter_enabled: bool = Field(default=True, description="Export spans and metrics to stderr")
    log_file: Optional[str] = Field(default=None, description="Optional log file next to the stderr handler")


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    output: OutputConfig = Field(default_factory=OutputConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    observability: ObservabilityConfig = Field(default_factory=ObservabilityConfig)

    # Environment variables (matched by field name, case-insensitive)
    cqsres_color: ColorMode = "auto"
    cqsres_format: OutputFormat = "text"
    cqsres_jobs: PositiveInt = 1
    cqsres_seed: int = 20240417
    cqsres_braid_checks: PositiveInt = 500
    cqsres_telemetry: bool = False
    cqsres_log_file: Optional[str] = None

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._setup_output_config()
        self._setup_sweep_config()
        self._setup_observability_config()

    def _setup_output_config(self):
        """Set up output configuration from environment variables."""
        self.output = OutputConfig(color=self.cqsres_color, default_format=self.cqsres_format)

    def _setup_sweep_config(self):
        """Set up sweep configuration from environment variables."""
        self.sweep = SweepConfig(
            jobs=self.cqsres_jobs,
            seed=self.cqsres_seed,
            braid_checks=self.cqsres_braid_checks,
        )

    def _setup_observability_config(self):
        """Set up observability configuration from environment variables."""
        self.observability = ObservabilityConfig(
            enable_telemetry=self.cqsres_telemetry,
            log_file=self.cqsres_log_file,
        )
