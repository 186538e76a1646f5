"""Strong generic Hodge cycles of perturbed Fermat varieties and their periods."""

__version__ = "0.1.0"
