"""
Tagged console reporting.

Messages go to stderr as one-line `[Tag] message` records so stdout stays
free for CSV / JSON / tree streams. `set_quiet(True)` silences [Info].
"""

import sys

_quiet = False


def set_quiet(quiet: bool) -> None:
    global _quiet
    _quiet = quiet


def is_quiet() -> bool:
    return _quiet


def info(message: str) -> None:
    if not _quiet:
        print(f"[Info] {message}", file=sys.stderr)


def phase(name: str, message: str) -> None:
    if not _quiet:
        print(f"[{name}] {message}", file=sys.stderr)


def warn(message: str) -> None:
    print(f"[Warn] {message}", file=sys.stderr)


def error(message: str) -> None:
    print(f"[Error] {message}", file=sys.stderr)
