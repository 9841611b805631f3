"""Command-line interface and JSON document formats."""

from .documents import Document, DocumentError, dumps, load, save
from .main import main

__all__ = ["Document", "DocumentError", "dumps", "load", "main", "save"]
