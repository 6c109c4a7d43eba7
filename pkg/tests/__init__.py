"""
Tests for the noloopwb algebra workbench.
"""
