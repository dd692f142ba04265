"""
Configuration Management
Centralized configuration with validation
"""

import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from application.dto.verification_report import VerificationBounds
from domain.exceptions.atlas_errors import ConfigurationError
from domain.services.handle_reduction import DEFAULT_BUDGET
from domain.value_objects.knot_type import KnotType
from infrastructure.rendering.svg_renderer import RenderOptions


@dataclass
class BraidConfig:
    """Braid word problem configuration"""
    reduction_budget: int = DEFAULT_BUDGET

    def validate(self) -> None:
        if self.reduction_budget < 1:
            raise ConfigurationError(
                "Invalid reduction_budget: must be at least 1",
                config_key="braid.reduction_budget"
            )


@dataclass
class InvariantsConfig:
    """Alexander polynomial size caps"""
    max_alexander_index: int = 20
    max_alexander_length: int = 400

    def validate(self) -> None:
        if self.max_alexander_index < 2:
            raise ConfigurationError(
                "Invalid max_alexander_index: must be at least 2",
                config_key="invariants.max_alexander_index"
            )
        if self.max_alexander_length < 1:
            raise ConfigurationError(
                "Invalid max_alexander_length: must be at least 1",
                config_key="invariants.max_alexander_length"
            )


@dataclass
class SweepConfig:
    """Default sweep grid"""
    types: List[str] = field(default_factory=lambda: [t.value for t in KnotType])
    epsilons: List[int] = field(default_factory=lambda: [-1, 1])
    a_min: int = 2
    a_max: int = 15
    k_min: int = 0
    k_max: int = 3
    t_min: int = -3
    t_max: int = 3
    trace_max_area: int = 5000

    def validate(self) -> None:
        """Validate sweep configuration"""
        valid_types = {t.value for t in KnotType}
        for tag in self.types:
            if str(tag).upper() not in valid_types:
                raise ConfigurationError(
                    f"Invalid knot type: {tag}",
                    config_key="sweep.types"
                )
        if not self.epsilons or any(e not in (1, -1) for e in self.epsilons):
            raise ConfigurationError(
                "Invalid epsilons: must be a non-empty subset of {-1, 1}",
                config_key="sweep.epsilons"
            )
        for name in ("a", "k", "t"):
            lo, hi = getattr(self, f"{name}_min"), getattr(self, f"{name}_max")
            if lo > hi:
                raise ConfigurationError(
                    f"Invalid {name} range: {lo} > {hi}",
                    config_key=f"sweep.{name}_min"
                )
        if self.k_min < 0:
            raise ConfigurationError(
                "Invalid k_min: must be non-negative",
                config_key="sweep.k_min"
            )
        if self.trace_max_area < 1:
            raise ConfigurationError(
                "Invalid trace_max_area: must be at least 1",
                config_key="sweep.trace_max_area"
            )

    def knot_types(self) -> List[KnotType]:
        return [KnotType.from_string(str(tag)) for tag in self.types]


@dataclass
class VerificationConfig(VerificationBounds):
    """Grid bounds for the verification suites"""

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "t_min":
                continue
            if not isinstance(value, int) or value < 0:
                raise ConfigurationError(
                    f"Invalid {f.name}: must be a non-negative integer",
                    config_key=f"verification.{f.name}"
                )
        if self.t_min > self.t_max:
            raise ConfigurationError(
                "Invalid t range: t_min > t_max",
                config_key="verification.t_min"
            )

    def to_bounds(self) -> VerificationBounds:
        return VerificationBounds(**asdict(self))


@dataclass
class RenderingConfig:
    """SVG drawing configuration"""
    unit_px: int = 40
    corner_radius: float = 0.3
    mark_double_points: bool = True
    margin_px: int = 20
    outline_color: str = "#555555"
    curve_color: str = "#1f5fbf"
    marker_color: str = "#d62728"
    stroke_width: float = 2.0

    def validate(self) -> None:
        if self.unit_px < 1:
            raise ConfigurationError(
                "Invalid unit_px: must be at least 1",
                config_key="rendering.unit_px"
            )
        if not 0 <= self.corner_radius < 0.5:
            raise ConfigurationError(
                "Invalid corner_radius: must lie in [0, 0.5)",
                config_key="rendering.corner_radius"
            )

    def to_options(self) -> RenderOptions:
        return RenderOptions(**asdict(self))


@dataclass
class ReportingConfig:
    """Reporting configuration"""
    output_dir: str = "reports"
    default_formats: List[str] = field(default_factory=lambda: ["csv", "json"])
    include_metadata: bool = True
    excel_engine: str = "openpyxl"
    csv_delimiter: str = ","
    json_indent: int = 2

    def validate(self) -> None:
        """Validate reporting configuration"""
        valid_formats = {"csv", "excel", "json"}
        for fmt in self.default_formats:
            if fmt.lower() not in valid_formats:
                raise ConfigurationError(
                    f"Invalid report format: {fmt}",
                    config_key="reporting.default_formats"
                )

        if self.json_indent < 0:
            raise ConfigurationError(
                "Invalid json_indent: must be non-negative",
                config_key="reporting.json_indent"
            )


@dataclass
class LoggingConfig:
    """Logging configuration"""
    enabled: bool = True
    log_dir: str = "logs"
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    audit_enabled: bool = True
    audit_file: str = "audit.log"
    max_log_size_mb: int = 10
    backup_count: int = 5

    def validate(self) -> None:
        """Validate logging configuration"""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if self.log_level.upper() not in valid_levels:
            raise ConfigurationError(
                f"Invalid log_level: {self.log_level}",
                config_key="logging.log_level"
            )
        if self.max_log_size_mb < 1:
            raise ConfigurationError(
                "Invalid max_log_size_mb: must be at least 1",
                config_key="logging.max_log_size_mb"
            )


_SECTIONS = {
    "braid": BraidConfig,
    "invariants": InvariantsConfig,
    "sweep": SweepConfig,
    "verification": VerificationConfig,
    "rendering": RenderingConfig,
    "reporting": ReportingConfig,
    "logging": LoggingConfig,
}


@dataclass
class AppConfiguration:
    """
    Application configuration

    Central configuration object for the entire application.
    Supports loading from multiple sources with priority.
    """
    braid: BraidConfig = field(default_factory=BraidConfig)
    invariants: InvariantsConfig = field(default_factory=InvariantsConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    rendering: RenderingConfig = field(default_factory=RenderingConfig)
    reporting: ReportingConfig = field(default_factory=ReportingConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Application-level settings
    app_name: str = "divide-atlas"
    version: str = "1.0.0"
    debug_mode: bool = False

    def validate(self) -> None:
        """
        Validate all configuration sections

        Raises:
            ConfigurationError: If any configuration is invalid
        """
        for name in _SECTIONS:
            getattr(self, name).validate()

    def ensure_directories(self) -> None:
        """Create necessary directories if they don't exist"""
        directories = [self.reporting.output_dir]
        if self.logging.enabled or self.logging.audit_enabled:
            directories.append(self.logging.log_dir)

        for directory in directories:
            Path(directory).mkdir(parents=True, exist_ok=True)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class ConfigurationLoader:
    """
    Configuration Loader

    Loads configuration from multiple sources with priority:
    1. Command-line arguments (highest priority, applied by the caller)
    2. Environment variables (a .env file is read first)
    3. Configuration file (YAML)
    4. Hardcoded defaults (lowest priority)
    """

    ENV_PREFIX = "ATLAS_"

    # env name -> (section, key, parser)
    ENV_VARS = {
        "BUDGET": ("braid", "reduction_budget", int),
        "LOG_LEVEL": ("logging", "log_level", str),
        "LOG_DIR": ("logging", "log_dir", str),
        "REPORT_DIR": ("reporting", "output_dir", str),
        "ALEX_MAX_INDEX": ("invariants", "max_alexander_index", int),
        "ALEX_MAX_LENGTH": ("invariants", "max_alexander_length", int),
        "TRACE_MAX_AREA": ("sweep", "trace_max_area", int),
        "DEBUG": (None, "debug_mode", lambda v: v.strip().lower() in ("1", "true", "yes")),
    }

    @classmethod
    def load_from_file(cls, config_path: str) -> Dict[str, Any]:
        """
        Load raw configuration data from a YAML file

        Raises:
            ConfigurationError: If file cannot be loaded
        """
        if not os.path.exists(config_path):
            raise ConfigurationError(
                f"Configuration file not found: {config_path}",
                config_file=config_path
            )

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(
                f"Failed to parse YAML configuration: {e}",
                config_file=config_path
            )
        except OSError as e:
            raise ConfigurationError(
                f"Failed to load configuration: {e}",
                config_file=config_path
            )

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigurationError(
                "Configuration root must be a mapping",
                config_file=config_path
            )
        return data

    @classmethod
    def apply_env(cls, config: AppConfiguration, environ: Optional[Dict[str, str]] = None) -> AppConfiguration:
        """
        Apply ATLAS_* environment variables on top of config

        Raises:
            ConfigurationError: If a numeric variable does not parse
        """
        environ = os.environ if environ is None else environ
        for suffix, (section, key, parse) in cls.ENV_VARS.items():
            raw = environ.get(cls.ENV_PREFIX + suffix)
            if raw is None or raw == "":
                continue
            try:
                value = parse(raw)
            except ValueError:
                raise ConfigurationError(
                    f"Invalid value for {cls.ENV_PREFIX}{suffix}: {raw}",
                    config_key=f"{section}.{key}" if section else key
                )
            target = getattr(config, section) if section else config
            setattr(target, key, value)
        return config

    @classmethod
    def load(
        cls,
        config_file: Optional[str] = None,
        use_env: bool = True,
        create_dirs: bool = True
    ) -> AppConfiguration:
        """
        Load configuration from all sources with priority

        Args:
            config_file: Optional path to a YAML configuration file
            use_env: Whether to read .env and ATLAS_* variables
            create_dirs: Whether to create report and log directories

        Returns:
            Merged, validated AppConfiguration

        Raises:
            ConfigurationError: If any source is invalid
        """
        data = cls.load_from_file(config_file) if config_file else {}
        config = cls._parse_config_data(data, config_file)

        if use_env:
            load_dotenv(override=False)
            cls.apply_env(config)

        config.validate()
        if create_dirs:
            config.ensure_directories()
        return config

    @classmethod
    def _parse_config_data(cls, data: Dict[str, Any], config_file: Optional[str] = None) -> AppConfiguration:
        """Parse configuration data dictionary into AppConfiguration"""
        config = AppConfiguration()

        for name, section_cls in _SECTIONS.items():
            if name not in data or data[name] is None:
                continue
            section_data = data[name]
            if not isinstance(section_data, dict):
                raise ConfigurationError(
                    f"Section '{name}' must be a mapping",
                    config_key=name,
                    config_file=config_file
                )
            try:
                setattr(config, name, section_cls(**section_data))
            except TypeError as e:
                raise ConfigurationError(
                    f"Unknown key in section '{name}': {e}",
                    config_key=name,
                    config_file=config_file
                )

        # Parse app-level settings
        for key in ("app_name", "version", "debug_mode"):
            if key in data:
                setattr(config, key, data[key])

        unknown = set(data) - set(_SECTIONS) - {"app_name", "version", "debug_mode"}
        if unknown:
            raise ConfigurationError(
                f"Unknown configuration section(s): {', '.join(sorted(unknown))}",
                config_file=config_file
            )

        return config

    @classmethod
    def write_default_config_file(cls, config_path: str) -> None:
        """Write the default configuration as YAML"""
        with open(config_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(AppConfiguration().to_dict(), f, default_flow_style=False, sort_keys=False)
