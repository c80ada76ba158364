"""Provide functionality for `qwalk.experiments.registry`."""

import importlib
import inspect
import pkgutil
from collections.abc import Iterator

from qwalk.experiments.base import BaseExperiment, ExperimentParams, ExperimentReport

CATALOG_PACKAGE = "qwalk.experiments.catalog"


class UnknownExperimentError(LookupError):
    """Raised when an experiment name is not registered."""


class ExperimentRegistry:
    """Represent `ExperimentRegistry`."""

    def __init__(self, package_name: str = CATALOG_PACKAGE) -> None:
        """Initialize the instance.

        Args:
            package_name: Package scanned for experiment classes.
        """
        self._package_name = package_name
        self._cache: dict[str, type[BaseExperiment]] | None = None

    def register(self, experiment_cls: type[BaseExperiment]) -> None:
        """Register an experiment class under its ``name``.

        Args:
            experiment_cls: The experiment cls value.
        """
        self.experiments()[experiment_cls.name] = experiment_cls

    def discover_under(self, package_name: str) -> Iterator[str]:
        """Import every module below ``package_name``.

        Args:
            package_name: The package name value.

        Yields:
            The values produced by the generator.
        """
        package = importlib.import_module(package_name)
        for module_info in pkgutil.walk_packages(package.__path__, prefix=f"{package_name}."):
            importlib.import_module(module_info.name)
            yield module_info.name

    def discover(self) -> Iterator[type[BaseExperiment]]:
        """Yield concrete experiment classes defined in the catalog.

        Yields:
            The values produced by the generator.
        """
        for module_name in self.discover_under(self._package_name):
            module = importlib.import_module(module_name)
            for _, loaded in inspect.getmembers(module, inspect.isclass):
                if not issubclass(loaded, BaseExperiment) or inspect.isabstract(loaded):
                    continue
                if loaded.__dict__.get("abstract", False):
                    continue
                if loaded.__module__ != module_name:
                    continue
                yield loaded

    def experiments(self) -> dict[str, type[BaseExperiment]]:
        """Return experiments keyed by name, discovering them on first use.

        Returns:
            The resulting value.
        """
        if self._cache is None:
            self._cache = {loaded.name: loaded for loaded in self.discover()}
        return self._cache

    def names(self) -> list[str]:
        """Return registered names in sorted order.

        Returns:
            The resulting value.
        """
        return sorted(self.experiments())

    def get(self, name: str) -> type[BaseExperiment]:
        """Return the experiment class called ``name``.

        Args:
            name: The name value.

        Returns:
            The resulting value.

        Raises:
            UnknownExperimentError: If nothing is registered under ``name``.
        """
        discovered = self.experiments()
        if name not in discovered:
            available = ", ".join(sorted(discovered)) or "none"
            raise UnknownExperimentError(f"Unknown experiment '{name}'. Available experiments: {available}.")
        return discovered[name]


registry = ExperimentRegistry()


def run_experiment(name: str, params: ExperimentParams | None = None) -> ExperimentReport:
    """Look up ``name`` and run it.

    Args:
        name: The name value.
        params: The params value.

    Returns:
        The resulting value.
    """
    return registry.get(name)().execute(params)
