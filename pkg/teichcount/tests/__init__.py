"""
Test suite for the teichcount engine
"""
