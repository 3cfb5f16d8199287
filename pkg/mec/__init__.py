"""mec - minimum-entropy couplings of discrete distributions."""

__version__ = "1.0.0"
