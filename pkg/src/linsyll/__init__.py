"""Linear syllogistic calculi: diagrams, SYLL provers, RLL with bottom, and proof nets."""

__version__ = "0.1.0"
