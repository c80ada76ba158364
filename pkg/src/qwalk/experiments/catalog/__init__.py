"""Built-in experiments, discovered by `qwalk.experiments.registry`."""
