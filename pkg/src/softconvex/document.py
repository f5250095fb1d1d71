"""Reading and writing soft-set documents.

A document is UTF-8 JSON with exactly four top-level keys::

    {
      "universe": ["u1", "u2", "u3"],
      "dim": 1,
      "box": {"min": [0], "max": [4]},
      "entries": [
        {"point": [1], "set": ["u1", "u3"]}
      ]
    }

Points not listed map to the empty set.  :func:`serialize` emits the
canonical form: entries sorted by point, element names in universe order,
fixed key order, one entry per line, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import ElemSubset, GridBox, SoftSet, Universe, ValidationError, format_point, make_soft_set

_TOP_KEYS = ("universe", "dim", "box", "entries")


class DocumentError(ValidationError):
    """A document is malformed or violates a soft-set invariant."""


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentError(message)


def _int_list(value, what: str, length: int | None = None) -> tuple[int, ...]:
    _expect(isinstance(value, list), f"{what} must be a list of integers")
    for c in value:
        _expect(isinstance(c, int) and not isinstance(c, bool), f"{what} must be a list of integers")
    if length is not None:
        _expect(len(value) == length, f"{what} has {len(value)} coordinates, expected {length}")
    return tuple(value)


def parse(text: str) -> SoftSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"line {e.lineno} column {e.colno}: {e.msg}") from None

    _expect(isinstance(doc, dict), "document must be a JSON object")
    missing = [k for k in _TOP_KEYS if k not in doc]
    _expect(not missing, f"missing key(s): {', '.join(missing)}")
    extra = sorted(set(doc) - set(_TOP_KEYS))
    _expect(not extra, f"unknown key(s): {', '.join(extra)}")

    names = doc["universe"]
    _expect(isinstance(names, list), "universe must be a list of element names")
    try:
        universe = Universe(tuple(names))
    except ValidationError as e:
        raise DocumentError(f"universe: {e}") from None

    dim = doc["dim"]
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
            "dim must be a positive integer")

    box_doc = doc["box"]
    _expect(isinstance(box_doc, dict) and set(box_doc) == {"min", "max"},
            "box must be an object with exactly the keys min and max")
    try:
        box = GridBox(_int_list(box_doc["min"], "box.min", dim),
                      _int_list(box_doc["max"], "box.max", dim))
    except DocumentError:
        raise
    except ValidationError as e:
        raise DocumentError(f"box: {e}") from None

    entries = doc["entries"]
    _expect(isinstance(entries, list), "entries must be a list")
    pairs = []
    for i, entry in enumerate(entries):
        where = f"entries[{i}]"
        _expect(isinstance(entry, dict) and set(entry) == {"point", "set"},
                f"{where} must be an object with exactly the keys point and set")
        point = _int_list(entry["point"], f"{where}.point", dim)
        members = entry["set"]
        _expect(isinstance(members, list), f"{where}.set must be a list of element names")
        _expect(len(set(map(str, members))) == len(members),
                f"{where}.set at point {list(point)} repeats an element")
        for name in members:
            _expect(isinstance(name, str) and name in universe.elements,
                    f"{where}.set at point {list(point)}: unknown element {name!r}")
        pairs.append((point, universe.subset(members)))
    try:
        return make_soft_set(universe, dim, box, pairs)
    except ValidationError as e:
        raise DocumentError(str(e)) from None


def _dump(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def serialize(s: SoftSet) -> str:
    lines = [
        "{",
        f'  "universe": {_dump(list(s.universe.elements))},',
        f'  "dim": {s.dim},',
        f'  "box": {{"min": {_dump(list(s.box.min))}, "max": {_dump(list(s.box.max))}}},',
    ]
    items = s.items()
    if not items:
        lines.append('  "entries": []')
    else:
        lines.append('  "entries": [')
        rows = [
            f'    {{"point": {_dump(list(p))}, "set": {_dump(v.names())}}}' for p, v in items
        ]
        lines.append(",\n".join(rows))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> SoftSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    try:
        return parse(text)
    except DocumentError as e:
        raise DocumentError(f"{path}: {e}") from None


def dump(s: SoftSet, path: str | Path) -> None:
    Path(path).write_text(serialize(s), encoding="utf-8")


def format_points(points) -> str:
    return "".join(format_point(p) + "\n" for p in points)


def subset_from_names(universe: Universe, names) -> ElemSubset:
    try:
        return universe.subset(names)
    except ValidationError as e:
        raise DocumentError(str(e)) from None
