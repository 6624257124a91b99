"""Plain-text character table files.

Layout (``#`` starts a comment)::

    group sym:3
    order 6
    exponent 6
    prime 7
    class 1a 1 1 1 ()
    class 2a 3 2 1 (1 2)
    class 3a 2 3 1 (1 2 3)
    char 1 1 1 1
    char 1 1 -1 1
    char 2 2 0 -1

Class lines carry label, size, element order, rational flag (0/1) and the
representative in 1-based cycle notation. Character lines carry the degree
followed by one value per class: a plain integer or ``cyc(e;c0,c1,...)``.
"""

from __future__ import annotations

from pathlib import Path

from .cyclotomic import Cyclotomic
from .dixon import CharacterTable, _sort_rows, verify_table
from .errors import InputError
from .permgroup import PermGroup, parse_cycles


def format_table(table: CharacterTable, name: str = "") -> str:
    lines = [
        f"group {name or table.group.name or '?'}",
        f"order {table.order}",
        f"exponent {table.exponent}",
        f"prime {table.prime_used}",
    ]
    for c in table.classes:
        lines.append(f"class {c.label} {c.size} {c.element_order} {int(c.is_rational)} {c.representative}")
    for d, row in zip(table.degrees, table.values):
        lines.append("char " + " ".join([str(d)] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def export_table(table: CharacterTable, path: str | Path, name: str = "") -> None:
    Path(path).write_text(format_table(table, name), encoding="utf-8")


def parse_table(text: str, G: PermGroup) -> CharacterTable:
    """Rebuild a table for G from its text form, then re-verify it exactly."""
    header: dict[str, str] = {}
    class_lines: list[list[str]] = []
    char_lines: list[list[str]] = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, _, rest = line.partition(" ")
        if tag in ("group", "order", "exponent", "prime"):
            header[tag] = rest.strip()
        elif tag == "class":
            parts = rest.split(None, 4)
            if len(parts) != 5:
                raise InputError(f"line {n}: class line needs label, size, order, rational flag, representative")
            class_lines.append(parts)
        elif tag == "char":
            char_lines.append(rest.split())
        else:
            raise InputError(f"line {n}: unknown record {tag!r}")

    for key in ("order", "exponent", "prime"):
        if key not in header:
            raise InputError(f"table file lacks a '{key}' line")
    try:
        order, exponent, prime = (int(header[k]) for k in ("order", "exponent", "prime"))
    except ValueError:
        raise InputError("order, exponent and prime must be integers") from None
    if order != G.order or exponent != G.exponent:
        raise InputError(
            f"table is for a group of order {order}, exponent {exponent}; "
            f"this group has order {G.order}, exponent {G.exponent}"
        )
    classes = G.classes
    if len(class_lines) != len(classes):
        raise InputError(f"table lists {len(class_lines)} classes, group has {len(classes)}")
    for parts, c in zip(class_lines, classes):
        label, size, elt_order, rational, rep = parts
        cid = G.class_lookup[G.index(parse_cycles(rep, G.degree))]
        if cid != c.index or label != c.label or int(size) != c.size or int(elt_order) != c.element_order:
            raise InputError(f"class line {' '.join(parts)!r} does not match class {c.label} of the group")
        if bool(int(rational)) != c.is_rational:
            raise InputError(f"class {label}: rational flag disagrees with the group")
    if len(char_lines) != len(classes):
        raise InputError(f"table lists {len(char_lines)} characters, expected {len(classes)}")
    degrees, values = [], []
    for parts in char_lines:
        if len(parts) != len(classes) + 1:
            raise InputError(f"character line has {len(parts) - 1} values, expected {len(classes)}")
        try:
            degrees.append(int(parts[0]))
            values.append([Cyclotomic.parse(t, exponent) for t in parts[1:]])
        except ValueError as exc:
            raise InputError(f"bad character value: {exc}") from None
    degrees, values = _sort_rows(degrees, values)
    table = CharacterTable(
        group=G,
        classes=classes,
        degrees=tuple(degrees),
        values=values,
        prime_used=prime,
        exponent=exponent,
    )
    verify_table(table)
    return table


def import_table(path: str | Path, G: PermGroup) -> CharacterTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read table file {path}: {exc.strerror or exc}") from None
    return parse_table(text, G)
