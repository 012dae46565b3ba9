"""
teichcount
Counting and verification engine for branched torus covers and slit-torus billiards
"""

__version__ = "1.0.0"
