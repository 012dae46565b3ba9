"""
Parallel sweep execution
"""

from .runner import SweepRunner, chunked

__all__ = ["SweepRunner", "chunked"]
