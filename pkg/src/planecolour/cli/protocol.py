"""Line protocol for external colouring oracles.

The client writes ``"<x> <y>\\n"`` (decimal, 17 significant digits) and reads
back ``"<colourId>\\n"``, one answer per request and in order.
"""

from __future__ import annotations

import os
import select
import shlex
import subprocess
import threading
from typing import Sequence

import numpy as np

from ..geometry import Point
from ..oracle import ColouringOracle, OracleError

DEFAULT_TIMEOUT = 5.0
# Requests pipelined per round trip; small enough that neither pipe fills up.
BATCH = 1024


def format_request(x: float, y: float) -> bytes:
    return b"%.17g %.17g\n" % (x, y)


def parse_response(line: bytes) -> int:
    text = line.strip()
    if not text.isdigit():
        raise OracleError(f"malformed oracle response {line!r}")
    return int(text)


class SubprocessOracle(ColouringOracle):
    """A colouring answered by a child process over stdin/stdout.

    Requests are serialised with a lock. Each answer must arrive within
    ``timeout`` seconds or :class:`OracleError` is raised and the child is
    killed.
    """

    def __init__(self, cmd: str | Sequence[str], timeout: float = DEFAULT_TIMEOUT,
                 palette: int = 0, name: str | None = None):
        argv = shlex.split(cmd) if isinstance(cmd, str) else list(cmd)
        if not argv:
            raise OracleError("empty oracle command")
        self.timeout = timeout
        self.palette = palette
        self.name = name or f"subprocess:{argv[0]}"
        self._lock = threading.Lock()
        self._buf = b""
        try:
            self._proc = subprocess.Popen(argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                                          bufsize=0)
        except OSError as exc:
            raise OracleError(f"cannot start oracle {argv[0]!r}: {exc}") from None
        self._out = self._proc.stdout.fileno()

    def _fail(self, msg: str):
        self.close()
        raise OracleError(msg)

    def _send(self, data: bytes):
        try:
            self._proc.stdin.write(data)
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError, ValueError):
            self._fail("oracle process closed its input")

    def _readline(self) -> bytes:
        while b"\n" not in self._buf:
            ready, _, _ = select.select([self._out], [], [], self.timeout)
            if not ready:
                self._fail(f"oracle did not answer within {self.timeout} s")
            chunk = os.read(self._out, 65536)
            if not chunk:
                self._fail("oracle process exited")
            self._buf += chunk
        line, self._buf = self._buf.split(b"\n", 1)
        return line

    def colour(self, p: Point) -> int:
        with self._lock:
            self._send(format_request(p.x, p.y))
            return parse_response(self._readline())

    def colour_many(self, xs, ys) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.float64)
        ys = np.asarray(ys, dtype=np.float64)
        out = np.empty(len(xs), dtype=np.int64)
        with self._lock:
            for lo in range(0, len(xs), BATCH):
                hi = min(lo + BATCH, len(xs))
                self._send(b"".join(format_request(float(x), float(y))
                                    for x, y in zip(xs[lo:hi], ys[lo:hi])))
                for i in range(lo, hi):
                    out[i] = parse_response(self._readline())
        return out

    def close(self):
        proc = getattr(self, "_proc", None)
        if proc is None or proc.poll() is not None:
            return
        try:
            proc.stdin.close()
        except OSError:
            pass
        try:
            proc.wait(timeout=1.0)
        except subprocess.TimeoutExpired:
            proc.kill()
            proc.wait()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def __del__(self):
        try:
            self.close()
        except Exception:
            pass


def _answer(oracle: ColouringOracle, raw: bytes) -> bytes | None:
    parts = raw.split()
    if not parts:
        return None
    if len(parts) != 2:
        raise OracleError(f"malformed request {raw!r}")
    try:
        p = Point(float(parts[0]), float(parts[1]))
    except ValueError:
        raise OracleError(f"malformed request {raw!r}") from None
    return b"%d\n" % oracle.colour(p)


def serve(oracle: ColouringOracle, infd: int, outfd: int) -> int:
    """Answer requests on raw file descriptors until end of input.

    Every complete line already received is answered before the next read,
    so a pipelined batch costs one write. Returns the number served.
    """
    served = 0
    buf = b""
    while True:
        chunk = os.read(infd, 65536)
        if not chunk:
            break
        buf += chunk
        *lines, buf = buf.split(b"\n")
        replies = [r for r in (_answer(oracle, ln) for ln in lines) if r is not None]
        served += len(replies)
        data = b"".join(replies)
        while data:
            data = data[os.write(outfd, data):]
    if buf.strip():
        reply = _answer(oracle, buf)
        os.write(outfd, reply)
        served += 1
    return served
