"""HTTP front end exposing the same reports as the CLI."""

from .app import app, create_app

__all__ = ["app", "create_app"]
