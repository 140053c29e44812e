"""External interfaces: configuration, task dispatch, HTTP service, CLI."""

from .config import ServiceConfig, build_registry, demo_registry, load_config
from .tasks import TaskRequest, run_task

__all__ = [
    "ServiceConfig",
    "TaskRequest",
    "build_registry",
    "demo_registry",
    "load_config",
    "run_task",
]
