"""
JSON solution documents.

Three kinds are accepted, all 1-based::

    {"kind": "table", "n": N, "S": [[[k, l], ...], ...]}
    {"kind": "permutations", "sigma": [[...], ...], "tau": [[...], ...]}
    {"kind": "relations", "n": N, "relations": [[[i, j], [k, l]], ...]}

For ``permutations`` each ``sigma[i]`` / ``tau[j]`` is the image list of a
permutation of ``{1..n}`` and ``S(x_i, x_j) = (x_sigma_i(j), x_tau_j(i))``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import SolutionError
from .solution import (
    RelationSet,
    SolutionTable,
    is_permutation,
    presentation_of,
    solution_from_presentation,
)

KINDS = ("table", "permutations", "relations")


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise SolutionError(f"{what} must be a list of integers")
    return value


def _permutation_family(doc, key):
    fam = doc.get(key)
    if not isinstance(fam, list) or not fam:
        raise SolutionError(f"'{key}' must be a nonempty list of permutations")
    n = len(fam)
    out = []
    for i, images in enumerate(fam):
        images = [v - 1 for v in _int_list(images, f"{key}[{i + 1}]")]
        if not is_permutation(images, n):
            raise SolutionError(f"{key}[{i + 1}] is not a permutation of 1..{n}")
        out.append(images)
    return out


def load_solution(document: Union[dict, str]) -> SolutionTable:
    """Parse and validate a solution document (dict or JSON text)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SolutionError(f"malformed JSON: {exc}") from None
    if not isinstance(document, dict):
        raise SolutionError("document must be a JSON object")
    kind = document.get("kind")
    if kind == "table":
        rows = document.get("S")
        if not isinstance(rows, list) or not rows:
            raise SolutionError("'S' must be a nonempty list of rows")
        n = document.get("n", len(rows))
        if n != len(rows):
            raise SolutionError(f"'n' is {n} but 'S' has {len(rows)} rows")
        table = []
        for i, row in enumerate(rows):
            if not isinstance(row, list):
                raise SolutionError(f"row {i + 1} must be a list")
            cells = []
            for j, cell in enumerate(row):
                cell = _int_list(cell, f"S[{i + 1}][{j + 1}]")
                if len(cell) != 2:
                    raise SolutionError(f"S[{i + 1}][{j + 1}] must be a pair")
                cells.append((cell[0] - 1, cell[1] - 1))
            table.append(cells)
        return SolutionTable.from_rows(table)
    if kind == "permutations":
        sigma = _permutation_family(document, "sigma")
        tau = _permutation_family(document, "tau")
        if len(sigma) != len(tau):
            raise SolutionError("'sigma' and 'tau' have different sizes")
        return SolutionTable.from_maps(sigma, tau)
    if kind == "relations":
        n = document.get("n")
        if not isinstance(n, int) or n < 1:
            raise SolutionError("'n' must be a positive integer")
        rels = document.get("relations")
        if not isinstance(rels, list):
            raise SolutionError("'relations' must be a list")
        parsed = []
        for idx, rel in enumerate(rels):
            if not isinstance(rel, list) or len(rel) != 2:
                raise SolutionError(f"relation {idx + 1} must have two sides")
            sides = []
            for side in rel:
                side = _int_list(side, f"relation {idx + 1}")
                if len(side) != 2:
                    raise SolutionError(f"relation {idx + 1}: both sides must have length 2")
                sides.append(tuple(v - 1 for v in side))
            parsed.append(tuple(sides))
        return solution_from_presentation(RelationSet(n, tuple(parsed)))
    raise SolutionError(f"unknown document kind {kind!r}; expected one of {', '.join(KINDS)}")


def read_solution(path: Union[str, Path]) -> SolutionTable:
    return load_solution(Path(path).read_text(encoding="utf-8"))


def solution_document(S: SolutionTable, kind: str = "table") -> dict:
    """Render ``S`` as a 1-based document of the given kind."""
    if kind == "table":
        return {
            "kind": "table",
            "n": S.n,
            "S": [[[a + 1, b + 1] for a, b in row] for row in S.table],
        }
    if kind == "permutations":
        return {
            "kind": "permutations",
            "sigma": [[v + 1 for v in S.g(x)] for x in range(S.n)],
            "tau": [[v + 1 for v in S.f(y)] for y in range(S.n)],
        }
    if kind == "relations":
        return relations_document(presentation_of(S))
    raise ValueError(f"unknown kind {kind!r}")


def relations_document(R: RelationSet) -> dict:
    return {
        "kind": "relations",
        "n": R.n,
        "relations": [[[i + 1, j + 1], [k + 1, l + 1]] for (i, j), (k, l) in R.relations],
    }


def dumps(obj) -> str:
    """Deterministic JSON text used by every report writer."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
