"""Homological quantum codes on triangulated 3-manifolds: triple
intersection invariants, diagonal logical gates, mapping-class-group and
back-engineering pipelines."""

__version__ = "0.1.0"
