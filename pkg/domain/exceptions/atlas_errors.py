"""
Divide Atlas Custom Exceptions
Hierarchical exception structure with context tracking
"""

from typing import Optional, Dict, Any
from datetime import datetime


class AtlasError(Exception):
    """
    Base exception for all atlas errors

    All custom exceptions inherit from this base class.
    Carries a context dictionary that is rendered into the message.
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        """
        Initialize the exception

        Args:
            message: Error message
            context: Additional context information
        """
        super().__init__(message)
        self.message = message
        self.context = context or {}
        self.timestamp = datetime.now()

    def __str__(self) -> str:
        """String representation"""
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} ({context_str})"
        return self.message

    def __repr__(self) -> str:
        """Developer representation"""
        return f"{self.__class__.__name__}('{self.message}', context={self.context})"


class ValidationError(AtlasError, ValueError):
    """
    Validation errors

    Raised when parameters, regions, words or CLI input are invalid.
    """

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
        constraint: Optional[str] = None
    ):
        """
        Initialize validation error

        Args:
            message: Error message
            field: Field that failed validation
            value: Invalid value
            constraint: Constraint that was violated
        """
        context = {}
        if field:
            context['field'] = field
        if value is not None:
            context['value'] = str(value)
        if constraint:
            context['constraint'] = constraint

        super().__init__(message, context)


class ConfigurationError(AtlasError):
    """
    Configuration errors

    Raised when configuration is invalid or missing.
    """

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        config_file: Optional[str] = None
    ):
        """
        Initialize configuration error

        Args:
            message: Error message
            config_key: Configuration key that is invalid
            config_file: Configuration file path
        """
        context = {}
        if config_key:
            context['config_key'] = config_key
        if config_file:
            context['config_file'] = config_file

        super().__init__(message, context)


class RegionError(AtlasError):
    """
    L-shaped region calculus errors

    Raised when a region formula or an adding-squares move cannot be applied.
    """

    def __init__(
        self,
        message: str,
        region: Optional[Any] = None,
        operation: Optional[str] = None
    ):
        """
        Initialize region error

        Args:
            message: Error message
            region: Region the operation was applied to
            operation: Operation that failed
        """
        context = {}
        if region is not None:
            context['region'] = str(region)
        if operation:
            context['operation'] = operation

        super().__init__(message, context)


class TraceError(AtlasError):
    """
    Divide tracing errors

    Raised when the lattice walk meets a vertex it cannot pass.
    """

    def __init__(
        self,
        message: str,
        point: Optional[Any] = None,
        region: Optional[Any] = None
    ):
        context = {}
        if point is not None:
            context['point'] = str(point)
        if region is not None:
            context['region'] = str(region)

        super().__init__(message, context)


class ReductionBudgetExceeded(AtlasError):
    """
    Handle reduction budget errors

    Raised when handle reduction runs out of letter operations.
    The word problem is left undecided; no answer is reported.
    """

    def __init__(
        self,
        message: str,
        budget: Optional[int] = None,
        steps: Optional[int] = None
    ):
        """
        Initialize budget error

        Args:
            message: Error message
            budget: Configured budget
            steps: Letter operations spent so far
        """
        context = {}
        if budget is not None:
            context['budget'] = budget
        if steps is not None:
            context['steps'] = steps

        super().__init__(message, context)


class InvariantError(AtlasError):
    """
    Knot invariant errors

    Raised when an invariant is requested outside its domain
    (links instead of knots, non-positive words) or an exact step fails.
    """

    def __init__(
        self,
        message: str,
        invariant: Optional[str] = None,
        detail: Optional[str] = None
    ):
        context = {}
        if invariant:
            context['invariant'] = invariant
        if detail:
            context['detail'] = detail

        super().__init__(message, context)


class RepositoryError(AtlasError):
    """
    Repository operation errors

    Raised when atlas files cannot be read or written.
    """

    def __init__(
        self,
        message: str,
        repository: Optional[str] = None,
        operation: Optional[str] = None
    ):
        """
        Initialize repository error

        Args:
            message: Error message
            repository: Repository name or path
            operation: Operation that failed
        """
        context = {}
        if repository:
            context['repository'] = repository
        if operation:
            context['operation'] = operation

        super().__init__(message, context)
