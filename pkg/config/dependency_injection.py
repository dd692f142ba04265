"""
Dependency Injection Container
Manages object creation and dependencies
"""

from typing import Any, Callable, Dict, Optional

from config.configuration import AppConfiguration, ConfigurationLoader


class ServiceContainer:
    """
    Simple dependency injection container

    Services are registered by type, either as singletons (built on
    first resolve) or transients (built on every resolve).
    """

    def __init__(self):
        self._services: Dict[type, Callable[[], Any]] = {}
        self._singletons: Dict[type, Any] = {}
        self._configuration: Optional[AppConfiguration] = None

    def register_singleton(self, interface: type, factory: Callable[[], Any]) -> None:
        """Register a service created once and reused"""
        self._services[interface] = lambda: self._get_or_create_singleton(interface, factory)

    def register_transient(self, interface: type, factory: Callable[[], Any]) -> None:
        """Register a service created on every resolve"""
        self._services[interface] = factory

    def register_instance(self, interface: type, instance: Any) -> None:
        self._singletons[interface] = instance
        self._services[interface] = lambda: instance

    def resolve(self, interface: type) -> Any:
        """
        Resolve a service by type

        Raises:
            KeyError: If service not registered
        """
        if interface not in self._services:
            raise KeyError(f"Service not registered: {interface.__name__}")
        return self._services[interface]()

    def is_registered(self, interface: type) -> bool:
        return interface in self._services

    def _get_or_create_singleton(self, interface: type, factory: Callable[[], Any]) -> Any:
        if interface not in self._singletons:
            self._singletons[interface] = factory()
        return self._singletons[interface]

    def set_configuration(self, config: AppConfiguration) -> None:
        self._configuration = config
        self.register_instance(AppConfiguration, config)

    def get_configuration(self) -> AppConfiguration:
        """Configured settings, loading defaults on first use"""
        if self._configuration is None:
            self.set_configuration(ConfigurationLoader.load())
        return self._configuration


# Global container instance
_container: Optional[ServiceContainer] = None


def get_container() -> ServiceContainer:
    """Get the global service container"""
    global _container
    if _container is None:
        _container = ServiceContainer()
    return _container


def reset_container() -> None:
    """Reset the global container (useful for testing)"""
    global _container
    _container = None


def configure_services(config: Optional[AppConfiguration] = None) -> ServiceContainer:
    """
    Configure all services in the container

    This is the composition root: domain services are singletons sharing
    one handle reducer, use cases are transient. Each call replaces the
    global container.

    Args:
        config: Optional configuration (loads default if not provided)

    Returns:
        Configured ServiceContainer
    """
    # lazy imports keep config importable without the whole stack
    from application.use_cases.describe_knot_use_case import DescribeKnotUseCase
    from application.use_cases.row_factory import AtlasRowFactory
    from application.use_cases.sweep_atlas_use_case import SweepAtlasUseCase
    from application.use_cases.verify_identities_use_case import VerifyIdentitiesUseCase
    from domain.services.berge_service import BergeService
    from domain.services.braid_service import BraidService
    from domain.services.handle_reduction import HandleReducer
    from domain.services.invariant_service import InvariantService
    from domain.services.lshape_service import LShapeService
    from domain.services.trace_service import TraceService
    from domain.services.ttk_service import TtkService
    from infrastructure.logging.audit_logger import AuditLogger
    from infrastructure.persistence.jsonlines_repository import JsonLinesAtlasRepository
    from infrastructure.rendering.svg_renderer import SvgDiagramRenderer
    from infrastructure.reporting.report_generator import ReportGenerator

    global _container
    container = ServiceContainer()
    _container = container
    if config is None:
        config = ConfigurationLoader.load()
    container.set_configuration(config)

    # Domain services
    container.register_singleton(
        HandleReducer, lambda: HandleReducer(budget=config.braid.reduction_budget)
    )
    container.register_singleton(
        BraidService, lambda: BraidService(container.resolve(HandleReducer))
    )
    container.register_singleton(BergeService, BergeService)
    container.register_singleton(
        LShapeService, lambda: LShapeService(container.resolve(BergeService))
    )
    container.register_singleton(TraceService, TraceService)
    container.register_singleton(
        InvariantService,
        lambda: InvariantService(
            container.resolve(BraidService),
            max_index=config.invariants.max_alexander_index,
            max_length=config.invariants.max_alexander_length
        )
    )
    container.register_singleton(
        TtkService,
        lambda: TtkService(
            container.resolve(BergeService),
            container.resolve(LShapeService),
            container.resolve(BraidService),
            container.resolve(InvariantService)
        )
    )

    # Infrastructure
    container.register_singleton(
        AuditLogger,
        lambda: AuditLogger(
            log_dir=config.logging.log_dir,
            audit_file=config.logging.audit_file,
            max_bytes=config.logging.max_log_size_mb * 1024 * 1024,
            backup_count=config.logging.backup_count,
            enabled=config.logging.audit_enabled
        )
    )
    container.register_singleton(
        ReportGenerator,
        lambda: ReportGenerator(
            output_dir=config.reporting.output_dir,
            json_indent=config.reporting.json_indent,
            csv_delimiter=config.reporting.csv_delimiter,
            excel_engine=config.reporting.excel_engine,
            include_metadata=config.reporting.include_metadata,
            app_name=config.app_name,
            version=config.version
        )
    )
    container.register_singleton(JsonLinesAtlasRepository, JsonLinesAtlasRepository)
    container.register_transient(
        SvgDiagramRenderer, lambda: SvgDiagramRenderer(config.rendering.to_options())
    )

    # Use cases
    container.register_singleton(
        AtlasRowFactory,
        lambda: AtlasRowFactory(
            container.resolve(BergeService),
            container.resolve(LShapeService),
            container.resolve(TraceService),
            container.resolve(BraidService),
            container.resolve(InvariantService),
            trace_max_area=config.sweep.trace_max_area
        )
    )
    container.register_transient(
        DescribeKnotUseCase,
        lambda: DescribeKnotUseCase(
            row_factory=container.resolve(AtlasRowFactory),
            berge_service=container.resolve(BergeService),
            lshape_service=container.resolve(LShapeService),
            braid_service=container.resolve(BraidService),
            audit_logger=container.resolve(AuditLogger)
        )
    )
    container.register_transient(
        SweepAtlasUseCase,
        lambda: SweepAtlasUseCase(
            row_factory=container.resolve(AtlasRowFactory),
            repository=container.resolve(JsonLinesAtlasRepository),
            report_service=container.resolve(ReportGenerator),
            audit_logger=container.resolve(AuditLogger)
        )
    )
    container.register_transient(
        VerifyIdentitiesUseCase,
        lambda: VerifyIdentitiesUseCase(
            berge_service=container.resolve(BergeService),
            lshape_service=container.resolve(LShapeService),
            trace_service=container.resolve(TraceService),
            braid_service=container.resolve(BraidService),
            invariant_service=container.resolve(InvariantService),
            ttk_service=container.resolve(TtkService),
            row_factory=container.resolve(AtlasRowFactory),
            repository=container.resolve(JsonLinesAtlasRepository),
            report_service=container.resolve(ReportGenerator),
            audit_logger=container.resolve(AuditLogger),
            bounds=config.verification.to_bounds()
        )
    )

    return container
