"""The local JSON check service behind the browser editor.

Stateless by construction: a response depends only on the request body, so
the same source always yields byte-identical output.  Checks run under a
small time budget; anything slower is answered with 422.
"""

from __future__ import annotations

import json
import os
import threading
from concurrent.futures import ThreadPoolExecutor, TimeoutError as FutureTimeout
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .api import analyze, json_dumps, report_to_json
from .fixtures import FIXTURES

DEFAULT_MAX_BODY = 1024 * 1024
CHECK_TIMEOUT_SECONDS = 5.0

_TIMEOUT_REPORT = {
    "verdict": "warning",
    "diagnostics": [
        {"start": 0, "end": 0, "line": 1, "col": 1, "message": "check timed out"}
    ],
    "renderedGoal": None,
    "promotedLayout": None,
    "isabelleTheory": None,
    "steps": [],
    "countermodel": None,
}

_STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
}


def max_body_bytes() -> int:
    value = os.environ.get("MINICALC_MAX_BODY")
    if value:
        try:
            return int(value)
        except ValueError:
            pass
    return DEFAULT_MAX_BODY


def _examples_payload() -> dict:
    return {
        "examples": [
            {"name": f.name, "title": f.title, "description": f.description, "source": f.source}
            for f in FIXTURES
        ]
    }


class CheckHandler(BaseHTTPRequestHandler):
    server_version = "minicalc"
    protocol_version = "HTTP/1.1"

    # Set by serve(); a shared pool keeps request threads lightweight.
    executor: ThreadPoolExecutor
    static_dir: Path | None = None

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, body: bytes, content_type: str = "application/json; charset=utf-8") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        self._send(status, json_dumps(payload).encode("utf-8"))

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/health":
            self._send_json(200, {"status": "ok"})
            return
        if self.path == "/examples":
            self._send_json(200, _examples_payload())
            return
        if self.static_dir is not None:
            self._serve_static()
            return
        self._send_json(404, {"error": "not found"})

    def _serve_static(self) -> None:
        assert self.static_dir is not None
        rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        if not str(target).startswith(str(self.static_dir.resolve())) or not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        content_type = _STATIC_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)

    def do_POST(self):
        if self.path != "/check":
            self._send_json(404, {"error": "not found"})
            return
        length = int(self.headers.get("Content-Length") or 0)
        limit = max_body_bytes()
        if length > limit:
            # Drain small overshoots so well-behaved clients see the 413
            # instead of a broken pipe; huge bodies just get cut off.
            if length <= limit + 16 * 1024 * 1024:
                remaining = length
                while remaining > 0:
                    chunk = self.rfile.read(min(remaining, 65536))
                    if not chunk:
                        break
                    remaining -= len(chunk)
            self.close_connection = True
            self._send_json(413, {"error": f"body exceeds {limit} bytes"})
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as error:
            self._send_json(400, {"error": f"malformed JSON body: {error}"})
            return
        if not isinstance(payload, dict) or not isinstance(payload.get("source"), str):
            self._send_json(400, {"error": 'expected a JSON object with a "source" string'})
            return
        future = self.executor.submit(lambda: report_to_json(analyze(payload["source"])))
        try:
            report = future.result(timeout=CHECK_TIMEOUT_SECONDS)
        except FutureTimeout:
            self._send_json(422, _TIMEOUT_REPORT)
            return
        self._send_json(200, report)


def make_server(host: str, port: int, static_dir: str | None = None) -> ThreadingHTTPServer:
    handler = type(
        "BoundCheckHandler",
        (CheckHandler,),
        {
            "executor": ThreadPoolExecutor(max_workers=4),
            "static_dir": Path(static_dir) if static_dir else None,
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str, port: int, static_dir: str | None = None) -> None:
    server = make_server(host, port, static_dir)
    bound_host, bound_port = server.server_address[:2]
    print(f"minicalc check service on http://{bound_host}:{bound_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def start_in_thread(host: str = "127.0.0.1", port: int = 0, static_dir: str | None = None):
    """Start a server on a background thread; returns (server, thread)."""
    server = make_server(host, port, static_dir)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
