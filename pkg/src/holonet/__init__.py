"""Distance and holonomy from networks of typed directed edges with no lengths."""

__version__ = "0.1.0"
