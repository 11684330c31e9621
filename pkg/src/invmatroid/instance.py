"""JSON instance files (``schema: 1``).

A document looks like::

    {
      "schema": 1,
      "elements": ["ab", "ac", ...],
      "matroid": {"type": "graphic", "vertices": ["a", "b", ...],
                  "edges": [["a", "b"], ["a", "c"], ...]},
      "s0": ["ac", ...],
      "weights": {"ab": "7", "ac": "0", ...},
      "variant": "im-all",
      "integral": false,
      "basis": ["ac", ...]
    }

Element ``i`` of the matroid node is ``elements[i]``. Matroid nodes are
``uniform {n, rank}``, ``partition {blocks, capacities}``, ``graphic
{vertices, edges}``, ``linear {matrix}``, ``direct_sum {parts}``, ``dual
{inner}``, ``restriction {inner, subset}`` and ``contraction {inner,
subset}``; ``blocks`` and ``subset`` hold local indices of the node they
belong to, and the parts of a direct sum take consecutive index ranges.
Rationals are strings such as ``"7"`` or ``"-5/2"``. ``basis`` is only read
for ``im`` (the fixed basis); without it ``s0`` is used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import IntegralityError, MalformedInputError
from .greedy import Variant, Weighting, check_integral, check_preconditions
from .matroid import Contraction, DirectSum, Dual, Graphic, LinearRational, Matroid, Partition, Restriction, Uniform

__all__ = ["ProblemInstance", "parse_instance", "load_instance", "parse_rational", "build_matroid"]

SCHEMA = 1


def parse_rational(text, where: str = "value") -> Fraction:
    # bools are ints in Python; floats would be lossy
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise MalformedInputError(f"{where}: expected a rational string like \"5/2\", got {text!r}")
    try:
        return Fraction(text.strip() if isinstance(text, str) else text)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f"{where}: {text!r} is not a rational number") from None


def _need(node: dict, key: str, where: str):
    if not isinstance(node, dict):
        raise MalformedInputError(f"{where}: expected an object")
    if key not in node:
        raise MalformedInputError(f"{where}: missing field {key!r}")
    return node[key]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInputError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list):
        raise MalformedInputError(f"{where}: expected a list")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(value)]


def build_matroid(node: dict, where: str = "matroid") -> Matroid:
    kind = _need(node, "type", where)
    if kind == "uniform":
        return Uniform(_int(_need(node, "n", where), f"{where}.n"), _int(_need(node, "rank", where), f"{where}.rank"))
    if kind == "partition":
        blocks = _need(node, "blocks", where)
        if not isinstance(blocks, list):
            raise MalformedInputError(f"{where}.blocks: expected a list")
        blocks = [_int_list(b, f"{where}.blocks[{i}]") for i, b in enumerate(blocks)]
        return Partition(blocks, _int_list(_need(node, "capacities", where), f"{where}.capacities"))
    if kind == "graphic":
        verts = _need(node, "vertices", where)
        if isinstance(verts, int) and not isinstance(verts, bool):
            verts = [str(i) for i in range(verts)]
        if not isinstance(verts, list) or len(set(map(str, verts))) != len(verts):
            raise MalformedInputError(f"{where}.vertices: expected a list of distinct labels")
        index = {str(v): i for i, v in enumerate(verts)}
        edges = []
        for i, e in enumerate(_need(node, "edges", where)):
            if not (isinstance(e, list) and len(e) == 2):
                raise MalformedInputError(f"{where}.edges[{i}]: expected a pair of vertex labels")
            try:
                edges.append((index[str(e[0])], index[str(e[1])]))
            except KeyError as exc:
                raise MalformedInputError(f"{where}.edges[{i}]: unknown vertex {exc.args[0]!r}") from None
        return Graphic(len(verts), edges, [str(v) for v in verts])
    if kind == "linear":
        rows = _need(node, "matrix", where)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise MalformedInputError(f"{where}.matrix: expected a list of rows")
        return LinearRational(
            [[parse_rational(v, f"{where}.matrix[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]
        )
    if kind == "direct_sum":
        parts = _need(node, "parts", where)
        if not isinstance(parts, list):
            raise MalformedInputError(f"{where}.parts: expected a list")
        return DirectSum([build_matroid(p, f"{where}.parts[{i}]") for i, p in enumerate(parts)])
    if kind == "dual":
        return Dual(build_matroid(_need(node, "inner", where), f"{where}.inner"))
    if kind in ("restriction", "contraction"):
        inner = build_matroid(_need(node, "inner", where), f"{where}.inner")
        subset = _int_list(_need(node, "subset", where), f"{where}.subset")
        return (Restriction if kind == "restriction" else Contraction)(inner, subset)
    raise MalformedInputError(f"{where}.type: unknown matroid type {kind!r}")


@dataclass
class ProblemInstance:
    matroid: Matroid
    names: tuple[str, ...]
    s0: frozenset[int]
    weights: Weighting
    variant: Variant
    integral: bool = False
    basis: frozenset[int] | None = None
    matroid_doc: dict = field(default_factory=dict, repr=False)

    @property
    def target(self) -> frozenset[int]:
        """The set the variant is stated for: the fixed basis for ``im``, else S0."""
        if self.variant is Variant.IM and self.basis is not None:
            return self.basis
        return self.s0

    def name_set(self, ids) -> list[str]:
        return [self.names[i] for i in sorted(ids)]

    def name_map(self, w: Weighting) -> dict[str, str]:
        return {self.names[i]: str(v) for i, v in enumerate(w)}

    def to_dict(self) -> dict[str, Any]:
        doc = {
            "schema": SCHEMA,
            "elements": list(self.names),
            "matroid": self.matroid_doc,
            "s0": self.name_set(self.s0),
            "weights": self.name_map(self.weights),
            "variant": self.variant.value,
            "integral": self.integral,
        }
        if self.basis is not None:
            doc["basis"] = self.name_set(self.basis)
        return doc


def _names_to_ids(names, index, where) -> frozenset[int]:
    if not isinstance(names, list):
        raise MalformedInputError(f"{where}: expected a list of element names")
    out = set()
    for name in names:
        if name not in index:
            raise MalformedInputError(f"{where}: unknown element {name!r}")
        out.add(index[name])
    return frozenset(out)


def parse_instance(doc: dict, variant: Variant | str | None = None, check: bool = True) -> ProblemInstance:
    """Validate a decoded document. ``variant`` overrides the file's tag."""
    if not isinstance(doc, dict):
        raise MalformedInputError("instance: expected a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise MalformedInputError(f"schema: unsupported version {schema!r}")
    names = _need(doc, "elements", "instance")
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise MalformedInputError("elements: expected a list of strings")
    seen = set()
    for s in names:
        if s in seen:
            raise MalformedInputError(f"elements: duplicate element name {s!r}")
        seen.add(s)
    index = {s: i for i, s in enumerate(names)}
    matroid_doc = _need(doc, "matroid", "instance")
    m = build_matroid(matroid_doc)
    if m.n != len(names):
        raise MalformedInputError(f"matroid has {m.n} elements but {len(names)} names are given")

    raw_w = _need(doc, "weights", "instance")
    if not isinstance(raw_w, dict):
        raise MalformedInputError("weights: expected an object mapping names to rationals")
    extra = sorted(set(raw_w) - seen)
    if extra:
        raise MalformedInputError(f"weights: unknown element {extra[0]!r}")
    missing = [s for s in names if s not in raw_w]
    if missing:
        raise MalformedInputError(f"weights: no weight for element {missing[0]!r}")
    values = tuple(parse_rational(raw_w[s], f"weights.{s}") for s in names)

    tag = variant if variant is not None else doc.get("variant")
    if tag is None:
        raise MalformedInputError("instance: no variant given in the file or on the command line")
    v = tag if isinstance(tag, Variant) else Variant.parse(str(tag))
    integral = doc.get("integral", False)
    if not isinstance(integral, bool):
        raise MalformedInputError("integral: expected true or false")
    weights = Weighting(values)
    if integral and not weights.is_integer:
        raise IntegralityError("integral instance has a non-integer weight")

    s0 = _names_to_ids(doc.get("s0", []), index, "s0")
    basis = _names_to_ids(doc["basis"], index, "basis") if "basis" in doc else None
    inst = ProblemInstance(m, tuple(names), s0, weights, v, integral, basis, matroid_doc)
    if check:
        check_integral(weights, v)
        check_preconditions(m, inst.target, v)
    return inst


def load_instance(path: str | Path, variant: Variant | str | None = None, check: bool = True) -> ProblemInstance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MalformedInputError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        context = lines[exc.lineno - 1] if 0 < exc.lineno <= len(lines) else ""
        raise MalformedInputError(
            f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {context}\n    {' ' * (exc.colno - 1)}^"
        ) from None
    try:
        return parse_instance(doc, variant, check)
    except MalformedInputError as exc:
        raise MalformedInputError(f"{path}: {exc}") from None
