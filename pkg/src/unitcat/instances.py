"""Instance documents: JSON-syntax text with rationals as "p/q" strings.

Each document carries a kind (poset | vcategory | distributor |
generators), an optional tensor + grid pair, and a payload validated
against the owning module's checker.  Every rejection carries a distinct
error code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .posets import FinPoset, InvalidPoset, is_continuous_distributor, poset
from .tnorms import (
    Lukasiewicz,
    Minimum,
    Product,
    Quantale,
    grid_closed,
    lukasiewicz,
    minimum,
    ordinal_sum,
    product,
)
from .values import RationalFormatError, UnitRangeError, parse_value
from .vcat import VCategory, validate_vcategory, vcategory

KINDS = ("poset", "vcategory", "distributor", "generators")


class InstanceError(ValueError):
    """Parse/validation failure with a stable error code and location."""

    def __init__(self, code: str, message: str, where: str = ""):
        super().__init__(f"[{code}] {message}" + (f" at {where}" if where else ""))
        self.code = code
        self.where = where


@dataclass
class InstanceDoc:
    kind: str
    quantale: Optional[Quantale]
    grid: Optional[int]
    poset: Optional[FinPoset] = None
    dst_poset: Optional[FinPoset] = None
    category: Optional[VCategory] = None
    matrix: Optional[tuple[tuple[Fraction, ...], ...]] = None
    functions: Optional[tuple[tuple[Fraction, ...], ...]] = None


def parse_tnorm(spec: str) -> Quantale:
    """min | product | lukasiewicz | ordinal:a-b-inner[,a-b-inner...]"""
    name = spec.strip().lower()
    if name in ("min", "minimum"):
        return minimum()
    if name == "product":
        return product()
    if name in ("lukasiewicz", "luk"):
        return lukasiewicz()
    if name.startswith("ordinal:"):
        inner_names = {"min": Minimum(), "minimum": Minimum(),
                       "product": Product(), "lukasiewicz": Lukasiewicz(), "luk": Lukasiewicz()}
        segments = []
        for part in name[len("ordinal:"):].split(","):
            pieces = part.split("-")
            if len(pieces) != 3 or pieces[2] not in inner_names:
                raise InstanceError("bad-document", f"malformed ordinal segment {part!r}")
            a, b = _value(pieces[0], part), _value(pieces[1], part)
            segments.append((a, b, inner_names[pieces[2]]))
        try:
            return ordinal_sum(*segments)
        except ValueError as exc:
            raise InstanceError("bad-document", str(exc))
    raise InstanceError("bad-document", f"unknown tensor {spec!r}")


def _value(text, where="") -> Fraction:
    try:
        return parse_value(text)
    except RationalFormatError as exc:
        raise InstanceError("bad-rational", str(exc), where) from exc
    except UnitRangeError as exc:
        raise InstanceError("value-out-of-range", str(exc), where) from exc


def _matrix(rows, where) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InstanceError("bad-document", "matrix must be a list of rows", where)
    return tuple(
        tuple(_value(v, f"{where}[{i}][{j}]") for j, v in enumerate(row))
        for i, row in enumerate(rows)
    )


def parse_instance(text: str, exhaustive: bool = True) -> InstanceDoc:
    """Validate a JSON instance document; exhaustive mode also demands a
    tensor/grid pair under which the grid is closed."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError("bad-document", f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InstanceError("bad-document", "document must be an object with a 'kind'")
    kind = doc["kind"]
    if kind not in KINDS:
        raise InstanceError("unknown-kind", f"kind must be one of {KINDS}, got {kind!r}")

    q = parse_tnorm(doc["tensor"]) if "tensor" in doc else None
    grid = doc.get("grid")
    if grid is not None and (not isinstance(grid, int) or grid < 1):
        raise InstanceError("bad-document", "grid must be a positive integer")
    if q is not None and grid is not None and exhaustive and not grid_closed(q, grid):
        raise InstanceError(
            "grid-not-closed",
            f"Q_{grid} is not closed under the {q.name} tensor: exhaustive suites need closure",
        )

    out = InstanceDoc(kind=kind, quantale=q, grid=grid)
    if kind == "poset":
        out.poset = _parse_poset(doc.get("leq"), "leq")
    elif kind == "vcategory":
        if q is None:
            raise InstanceError("bad-document", "vcategory documents need a tensor")
        matrix = _matrix(doc.get("matrix"), "matrix")
        try:
            out.category = vcategory(q, matrix)
        except ValueError as exc:
            raise InstanceError("bad-document", str(exc), "matrix") from exc
        rep = validate_vcategory(out.category)
        if not rep.passed:
            raise InstanceError("bad-document", rep.failures[0], "matrix")
    elif kind == "distributor":
        out.poset = _parse_poset(doc.get("src"), "src")
        out.dst_poset = _parse_poset(doc.get("dst"), "dst")
        out.matrix = _matrix(doc.get("matrix"), "matrix")
        rows01 = tuple(tuple(int(v) if v in (0, 1) else -1 for v in row) for row in out.matrix)
        if any(v == -1 for row in rows01 for v in row):
            if not all(0 <= v <= 1 for row in out.matrix for v in row):
                raise InstanceError("value-out-of-range", "distributor entries must lie in [0,1]")
        elif len(rows01) != out.poset.size or any(len(r) != out.dst_poset.size for r in rows01):
            raise InstanceError("bad-document", "distributor shape mismatch", "matrix")
        elif not is_continuous_distributor(rows01, out.poset, out.dst_poset):
            raise InstanceError(
                "bad-document", "matrix is not down/up-closed for the posets", "matrix"
            )
    elif kind == "generators":
        out.poset = _parse_poset(doc.get("poset"), "poset")
        out.functions = _matrix(doc.get("functions"), "functions")
    return out


def _parse_poset(rows, where) -> FinPoset:
    if isinstance(rows, dict):
        rows = rows.get("leq")
    if not isinstance(rows, list):
        raise InstanceError("bad-document", "poset needs a 'leq' matrix", where)
    try:
        return poset(rows)
    except InvalidPoset as exc:
        raise InstanceError("bad-poset", str(exc), where) from exc
