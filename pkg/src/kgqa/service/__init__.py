"""HTTP facade over the engine."""

from kgqa.service.app import create_app

__all__ = ["create_app"]
