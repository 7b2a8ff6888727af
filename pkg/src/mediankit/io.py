"""Algebra documents and Hasse-diagram output.

A document is one JSON object on a single line.  Five kinds exist::

    {"kind":"table","n":2,"table":[0,0,0,1,0,1,1,1]}
    {"kind":"poset","n":4,"covers":[[0,1],[1,2],[1,3]],"labels":["a","b","c","d"]}
    {"kind":"chain","length":3}
    {"kind":"product","lengths":[3,2]}
    {"kind":"boolean-cube","exponent":3}

``labels`` is optional for ``table`` and ``poset``.  ``serialize`` writes
fields in the order above, covers sorted, no whitespace.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .core import FinitePoset, MedianAlgebra, from_poset, verify_median_axioms
from .duality import DualSpace
from .errors import MedianKitError
from .homs import ProductOfChains

FIELDS = {
    "table": ("n", "table"),
    "poset": ("n", "covers"),
    "chain": ("length",),
    "product": ("lengths",),
    "boolean-cube": ("exponent",),
}
OPTIONAL = {"table": ("labels",), "poset": ("labels",)}


class ParseError(ValueError):
    def __init__(self, msg, line=1, column=1):
        self.line, self.column = line, column
        super().__init__(f"{line}:{column}: {msg}")


class ValidationError(ValueError):
    def __init__(self, cause: Exception):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}")


@dataclass(eq=False)
class AlgebraDocument:
    kind: str
    payload: dict
    _poset: FinitePoset | None = field(default=None, repr=False)

    @cached_property
    def algebra(self) -> MedianAlgebra:
        p = self.payload
        try:
            if self.kind == "table":
                return verify_median_axioms(p["table"], p["n"], p.get("labels"))
            if self.kind == "poset":
                return from_poset(self.poset)
            return self.product_shape.algebra()
        except (MedianKitError, ValueError) as exc:
            raise ValidationError(exc) from exc

    @property
    def poset(self) -> FinitePoset | None:
        return self._poset

    @property
    def product_shape(self) -> ProductOfChains | None:
        p = self.payload
        if self.kind == "chain":
            return ProductOfChains((p["length"],))
        if self.kind == "product":
            return ProductOfChains(tuple(p["lengths"]))
        if self.kind == "boolean-cube":
            return ProductOfChains((2,) * p["exponent"])
        return None

    @property
    def labels(self):
        return self.payload.get("labels")


def _expect(cond, msg):
    if not cond:
        raise ParseError(msg)


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


def parse_document(text: str) -> AlgebraDocument:
    """Parse and validate one document.

    Tables are checked against the median axioms immediately.  A poset only
    has to be a partial order here; its median is built on first use, since
    figures such as A1 and A5 are valid posets without one.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    _expect(isinstance(obj, dict), "document must be an object")
    kind = obj.get("kind")
    _expect(kind in FIELDS, f"unknown kind {kind!r}")
    allowed = {"kind", *FIELDS[kind], *OPTIONAL.get(kind, ())}
    extra = set(obj) - allowed
    _expect(not extra, f"unexpected fields {sorted(extra)}")
    for name in FIELDS[kind]:
        _expect(name in obj, f"missing field {name!r}")
    payload = {k: obj[k] for k in obj if k != "kind"}
    poset = None
    if kind in ("table", "poset"):
        n = payload["n"]
        _expect(_is_int(n) and n >= 1, "n must be a positive integer")
        labels = payload.get("labels")
        if labels is not None:
            _expect(isinstance(labels, list) and len(labels) == n, "labels must list n strings")
            _expect(all(isinstance(s, str) for s in labels), "labels must be strings")
    if kind == "table":
        t = payload["table"]
        _expect(isinstance(t, list) and all(_is_int(v) for v in t), "table must be a list of integers")
        _expect(len(t) == n ** 3, f"table must have n^3 = {n ** 3} entries")
    elif kind == "poset":
        covers = payload["covers"]
        _expect(
            isinstance(covers, list)
            and all(isinstance(c, list) and len(c) == 2 and all(_is_int(v) and 0 <= v < n for v in c) for c in covers),
            "covers must be [lower, upper] index pairs",
        )
        payload["covers"] = sorted(covers)
        try:
            poset = FinitePoset.from_covers(n, [tuple(c) for c in covers], payload.get("labels"))
        except MedianKitError as exc:
            raise ValidationError(exc) from exc
    elif kind == "chain":
        _expect(_is_int(payload["length"]) and payload["length"] >= 1, "length must be a positive integer")
    elif kind == "product":
        ls = payload["lengths"]
        _expect(isinstance(ls, list) and ls and all(_is_int(v) and v >= 1 for v in ls), "lengths must be positive integers")
    else:
        _expect(_is_int(payload["exponent"]) and payload["exponent"] >= 1, "exponent must be a positive integer")
    doc = AlgebraDocument(kind, payload, poset)
    if kind != "poset":
        doc.algebra  # eager axiom check
    return doc


def serialize(doc: AlgebraDocument) -> str:
    obj = {"kind": doc.kind}
    for name in FIELDS[doc.kind] + OPTIONAL.get(doc.kind, ()):
        if name in doc.payload and doc.payload[name] is not None:
            obj[name] = doc.payload[name]
    if "covers" in obj:
        obj["covers"] = sorted(obj["covers"])
    return json.dumps(obj, separators=(",", ":")) + "\n"


def table_document(A: MedianAlgebra) -> AlgebraDocument:
    payload = {"n": A.n, "table": A.flat()}
    if A.labels:
        payload["labels"] = list(A.labels)
    return AlgebraDocument("table", payload)


def poset_document(P: FinitePoset) -> AlgebraDocument:
    payload = {"n": P.n, "covers": [list(c) for c in P.covers()]}
    if P.labels:
        payload["labels"] = list(P.labels)
    return parse_document(serialize(AlgebraDocument("poset", payload)))


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(P, name="hasse") -> str:
    """Hasse diagram in DOT: cover edges only, drawn bottom to top.  Dual
    spaces also get dashed complement links."""
    if isinstance(P, DualSpace):
        poset = P.poset()
    else:
        poset = P
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(poset.n):
        lines.append(f"  n{x} [label={_quote(poset.label(x))}];")
    for x, y in poset.covers():
        lines.append(f"  n{x} -> n{y};")
    if isinstance(P, DualSpace):
        for x, c in enumerate(P.complement):
            if x < c:
                lines.append(f"  n{x} -> n{c} [style=dashed, dir=none, constraint=false, label=\"c\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
