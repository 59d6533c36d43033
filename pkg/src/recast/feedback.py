"""Durable append-only feedback log (JSON lines, one record per line)."""

from __future__ import annotations

import json
import os
import threading
from datetime import datetime, timezone


class FeedbackLog:
    """Serialized writer with fsync-on-append; safe under concurrent use."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()

    def append(self, text: str, comment: str, score_0_100: float) -> None:
        record = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "text": text,
            "comment": comment,
            "score_0_100": score_0_100,
        }
        line = json.dumps(record, ensure_ascii=False) + "\n"
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line)
                fh.flush()
                os.fsync(fh.fileno())
