"""
Services package for the ncx toolkit.
"""
