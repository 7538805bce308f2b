"""
betti-bounds test suite
"""
