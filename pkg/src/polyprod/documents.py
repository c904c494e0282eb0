"""Plain-text documents describing complexes.

A document is a handful of ``key: value`` lines with JSON values:

    ground: [1,2,3]
    facets: [[1,2],[2,3]]

``blocks`` may appear between the two to record a partition of the ground
into consecutive runs (used by composition commands).  ``facets: []`` is
the void complex and ``facets: [[]]`` the complex whose only face is the
empty set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import SimplicialComplex, mask_of, vertices_of

_KEYS = ("ground", "blocks", "facets")


@dataclass(frozen=True)
class ComplexDocument:
    ground: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]
    blocks: tuple[int, ...] | None = None

    def __post_init__(self):
        if list(self.ground) != sorted(set(self.ground)):
            raise ValueError("ground must list distinct vertices in increasing order")
        if any(v < 1 for v in self.ground):
            raise ValueError("vertex labels must be positive")
        if self.blocks is not None:
            if any(b < 1 for b in self.blocks):
                raise ValueError("block sizes must be positive")
            if sum(self.blocks) != len(self.ground):
                raise ValueError("block sizes must sum to the ground size")

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(mask_of(self.ground), self.facets)

    def block_grounds(self) -> list[int]:
        """Masks of the consecutive runs of ground vertices, per block."""
        if self.blocks is None:
            raise ValueError("document has no blocks line")
        out, i = [], 0
        for b in self.blocks:
            out.append(mask_of(self.ground[i:i + b]))
            i += b
        return out

    def render(self) -> str:
        lines = [f"ground: {json.dumps(list(self.ground), separators=(',', ':'))}"]
        if self.blocks is not None:
            lines.append(
                f"blocks: {json.dumps(list(self.blocks), separators=(',', ':'))}"
            )
        lines.append(
            f"facets: {json.dumps([list(f) for f in self.facets], separators=(',', ':'))}"
        )
        return "\n".join(lines) + "\n"


def parse_document(text: str) -> ComplexDocument:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key: value', got {raw!r}")
        if key not in _KEYS:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        try:
            fields[key] = json.loads(value)
        except json.JSONDecodeError as e:
            raise ValueError(f"line {lineno}: bad JSON value for {key!r}: {e}") from e
    if "ground" not in fields:
        raise ValueError("document is missing the ground line")
    if "facets" not in fields:
        raise ValueError("document is missing the facets line")
    ground = fields["ground"]
    facets = fields["facets"]
    if not isinstance(ground, list) or not all(isinstance(v, int) for v in ground):
        raise ValueError("ground must be a JSON list of integers")
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in facets
    ):
        raise ValueError("facets must be a JSON list of integer lists")
    blocks = fields.get("blocks")
    if blocks is not None and (
        not isinstance(blocks, list) or not all(isinstance(b, int) for b in blocks)
    ):
        raise ValueError("blocks must be a JSON list of integers")
    return ComplexDocument(
        ground=tuple(ground),
        facets=tuple(tuple(f) for f in facets),
        blocks=tuple(blocks) if blocks is not None else None,
    )


def document_of(K: SimplicialComplex, blocks=None) -> ComplexDocument:
    facets = tuple(tuple(vertices_of(f)) for f in K.facets())
    return ComplexDocument(
        ground=tuple(vertices_of(K.ground)),
        facets=facets,
        blocks=tuple(blocks) if blocks is not None else None,
    )
