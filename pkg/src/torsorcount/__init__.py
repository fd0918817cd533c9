"""Exact morphism counts from P^1 to the plane blown up in three collinear points."""
from __future__ import annotations

__version__ = "0.1.0"
