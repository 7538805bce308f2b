"""
Command line surface for betti-bounds
"""

from .commands import main, run

__all__ = ['main', 'run']
