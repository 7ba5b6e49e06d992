"""HTTP service wrapping the verification toolchain."""

from .app import create_app

__all__ = ["create_app"]
