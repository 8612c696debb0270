"""Helpers for the line-oriented ASCII formats."""

from __future__ import annotations


def content_lines(text: str) -> list[str]:
    """Strip blank lines and `#` comment lines, returning the rest."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out
