"""
Models package for the ncx toolkit.
"""
