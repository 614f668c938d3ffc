"""HTTP facade over the core library.

`create_app` builds the FastAPI application; run it with any ASGI
server, e.g. ``uvicorn dodeca.service:app``.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
