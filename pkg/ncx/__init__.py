"""
ncx - N-complex toolkit

This package contains the exact linear algebra core, the N-complex models and
the services that build homologies, cones, suspensions, long exact sequences
and the Mor transport on top of them.
"""

__version__ = "1.0.0"
__author__ = "ncx Team"
