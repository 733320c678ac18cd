# error types and file helpers
# src/lozenge_core/io.py

from __future__ import annotations

import json
from pathlib import Path
from typing import Any


class LozengeError(RuntimeError):
    pass


class InputError(LozengeError):
    """Raised for anything caused by bad user input (CLI exit code 2)."""


class LozengeIOError(InputError):
    pass


class BadLetter(InputError):
    pass


class EmptyContour(InputError):
    pass


class NotClosed(InputError):
    pass


class SelfIntersecting(InputError):
    pass


class EmptyInterior(InputError):
    pass


class BadSize(InputError):
    pass


class NotAPartition(InputError):
    pass


class NotAPlanePartition(InputError):
    pass


class OutOfRange(InputError):
    pass


class BadPalette(InputError):
    pass


class Untileable(LozengeError):
    pass


class InconsistentHeights(Untileable):
    pass


class NotATiling(LozengeError):
    pass


class NotAHeightFunction(LozengeError):
    pass


class DomainMismatch(LozengeError):
    pass


class NotFlippable(LozengeError):
    pass


class NotFlipClosed(LozengeError):
    pass


class NotComparable(LozengeError):
    pass


class UnsatisfiableCube(LozengeError):
    pass


class NotFertile(LozengeError):
    pass


class DuplicateDetected(LozengeError):
    pass


class FractureError(LozengeError):
    pass


def safe_mkdir(path: Path) -> None:
    path.mkdir(parents=True, exist_ok=True)


def load_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except Exception as e:
        raise LozengeIOError(f"Failed to load JSON: {path} ({e})") from e


def save_bytes(data: bytes, path: Path, *, overwrite: bool = False) -> None:
    path = Path(path)
    if path.exists() and not overwrite:
        raise LozengeIOError(f"Refusing to overwrite existing file: {path}")
    safe_mkdir(path.parent)
    try:
        path.write_bytes(data)
    except Exception as e:
        raise LozengeIOError(f"Failed to write file: {path} ({e})") from e


def save_json(obj: Any, path: Path, *, overwrite: bool = False) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    save_bytes(text.encode("utf-8"), path, overwrite=overwrite)
