"""Entry point for ``python -m polymin``."""
from .main import app  # pragma: no cover

app(prog_name="polymin")  # pragma: no cover
