"""Deterministic text serialisation for matrices, skeletons, and posets.

Label strings are bit-exact everywhere: a single crown names its pairs
``a{p}b{q}`` (lower, upper) and its elements ``a{p}``/``b{q}``; layered
structures use ``x{row}.{pos}|x{row}.{pos}`` for (lower, upper) and
``x{row}.{pos}`` for elements.  Skeleton nodes are named by the dual,
upper element first.  Identical inputs always give identical bytes.
"""

from __future__ import annotations

import json
from collections.abc import Sequence

from .crowns import CrownParams, classify, layout, rep
from .cycles import SkeletonGraph
from .matrix import AdjMatrix, Label
from .poset import CriticalPair, Element, Poset

MATRIX_FORMATS = ("pretty", "csv", "json", "matrixmarket")
SKELETON_FORMATS = ("pretty", "json", "dot", "matrixmarket")
POSET_FORMATS = ("pretty", "json", "dot", "csv")


# -- naming ------------------------------------------------------------


def pairs_are_single(pairs: Sequence[CriticalPair]) -> bool:
    return all(p.lower.row == 1 and p.upper.row == 2 for p in pairs)


def element_label(e: Element, single: bool) -> str:
    if single:
        return f"{'ab'[e.row - 1]}{e.pos}"
    return f"x{e.row}.{e.pos}"


def pair_label(pair: CriticalPair, single: bool) -> str:
    if single:
        return f"a{pair.lower.pos}b{pair.upper.pos}"
    return f"{element_label(pair.lower, False)}|{element_label(pair.upper, False)}"


def dual_label(pair: CriticalPair, single: bool) -> str:
    if single:
        return f"b{pair.upper.pos}a{pair.lower.pos}"
    return f"{element_label(pair.upper, False)}|{element_label(pair.lower, False)}"


def matrix_is_single(matrix: AdjMatrix) -> bool:
    if matrix.params is not None:
        return matrix.params.layers == 1
    return pairs_are_single([label.pair for label in matrix.labels])


def matrix_labels(matrix: AdjMatrix) -> list[str]:
    single = matrix_is_single(matrix)
    return [pair_label(label.pair, single) for label in matrix.labels]


# -- matrices ----------------------------------------------------------


def export_matrix(matrix: AdjMatrix, fmt: str) -> str:
    if fmt == "pretty":
        return _matrix_pretty(matrix)
    if fmt == "csv":
        return _matrix_csv(matrix)
    if fmt == "json":
        return _matrix_json(matrix)
    if fmt == "matrixmarket":
        return _entries_matrixmarket(matrix.entries)
    raise ValueError(f"unsupported matrix format {fmt!r}")


def _matrix_pretty(matrix: AdjMatrix) -> str:
    labels = matrix_labels(matrix)
    lines = [" ".join(labels)]
    for index, row in enumerate(matrix.entries):
        if index and matrix.block_rows and index % matrix.block_rows == 0:
            lines.append("")
        lines.append(labels[index] + " " + " ".join(str(bit) for bit in row))
    return "\n".join(lines) + "\n"


def _matrix_csv(matrix: AdjMatrix) -> str:
    labels = matrix_labels(matrix)
    lines = ["," + ",".join(labels)]
    for label, row in zip(labels, matrix.entries):
        lines.append(label + "," + ",".join(str(bit) for bit in row))
    return "\n".join(lines) + "\n"


def parse_matrix_csv(text: str) -> tuple[tuple[str, ...], tuple[tuple[int, ...], ...]]:
    """Inverse of the CSV export: (column labels, entries)."""
    lines = [line for line in text.split("\n") if line]
    header = lines[0].split(",")
    if header[0] != "":
        raise ValueError("matrix CSV must start with an empty corner cell")
    labels = tuple(header[1:])
    entries = []
    for line in lines[1:]:
        cells = line.split(",")
        entries.append(tuple(int(c) for c in cells[1:]))
    if len(entries) != len(labels) or any(len(r) != len(labels) for r in entries):
        raise ValueError("matrix CSV is not square")
    return labels, tuple(entries)


def _matrix_json(matrix: AdjMatrix) -> str:
    params = matrix.params
    doc = {
        "params": None
        if params is None
        else {"n": params.n, "k": params.k, "layers": params.layers},
        "regime": None
        if matrix.regime is None
        else {
            "kind": matrix.regime.kind.value,
            "w": matrix.regime.w,
            "reducedN": matrix.regime.reduced_n,
            "reducedK": matrix.regime.reduced_k,
        },
        "labels": [
            {
                "lowerRow": label.lower.row,
                "lowerPos": label.lower.pos,
                "upperRow": label.upper.row,
                "upperPos": label.upper.pos,
            }
            for label in matrix.labels
        ],
        "matrix": [list(row) for row in matrix.entries],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_matrix_json(text: str) -> AdjMatrix:
    """Inverse of the JSON export for crown-built matrices."""
    doc = json.loads(text)
    if doc.get("params") is None:
        raise ValueError("matrix JSON without params cannot be reconstructed")
    params = CrownParams(doc["params"]["n"], doc["params"]["k"], doc["params"]["layers"])
    lay = layout(params, permissive=True)
    regime = classify(params) if params.n >= 3 else None
    modulus = params.modulus
    labels = []
    for item in doc["labels"]:
        lower = Element(item["lowerRow"], item["lowerPos"])
        upper = Element(item["upperRow"], item["upperPos"])
        reach = upper.row - lower.row
        offset = (lower.pos - (upper.pos - reach + 1)) % modulus
        labels.append(Label(lower.row, upper.pos, offset, lower, upper))
    entries = tuple(tuple(int(bit) for bit in row) for row in doc["matrix"])
    if len(entries) != len(labels) or any(len(r) != len(labels) for r in entries):
        raise ValueError("matrix JSON is not square")
    return AdjMatrix(params, regime, tuple(labels), entries, lay.block_rows)


def _entries_matrixmarket(entries: tuple[tuple[int, ...], ...]) -> str:
    coords = [
        (i + 1, j + 1)
        for i, row in enumerate(entries)
        for j in range(i)
        if row[j]
    ]
    lines = ["%%MatrixMarket matrix coordinate pattern symmetric"]
    lines.append(f"{len(entries)} {len(entries)} {len(coords)}")
    lines.extend(f"{i} {j}" for i, j in coords)
    return "\n".join(lines) + "\n"


# -- skeletons ---------------------------------------------------------


def export_skeleton(graph: SkeletonGraph, fmt: str) -> str:
    single = pairs_are_single(graph.vertices)
    names = [dual_label(v, single) for v in graph.vertices]
    edges = sorted(graph.edges)
    if fmt == "dot":
        lines = ["graph skeleton {"]
        lines.extend(f'  "{name}";' for name in names)
        lines.extend(f'  "{names[i]}" -- "{names[j]}";' for i, j in edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "pretty":
        lines = [f"vertices: {graph.vertex_count}", f"edges: {graph.edge_count}"]
        lines.extend(f"{names[i]} -- {names[j]}" for i, j in edges)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"vertices": names, "edges": [list(edge) for edge in edges]}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "matrixmarket":
        dim = graph.vertex_count
        grid = [[0] * dim for _ in range(dim)]
        for i, j in edges:
            grid[i][j] = grid[j][i] = 1
        return _entries_matrixmarket(tuple(tuple(row) for row in grid))
    raise ValueError(f"unsupported skeleton format {fmt!r}")


# -- posets ------------------------------------------------------------


def export_poset(poset: Poset, fmt: str) -> str:
    single = all(e.row <= 2 for e in poset.elements)
    names = [element_label(e, single) for e in poset.elements]
    if fmt == "dot":
        covers = sorted(
            (poset.index(a), poset.index(b)) for a, b in poset.covers()
        )
        lines = ["digraph hasse {"]
        lines.extend(f'  "{name}";' for name in names)
        lines.extend(f'  "{names[i]}" -> "{names[j]}";' for i, j in covers)
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "pretty":
        covers = sorted((poset.index(a), poset.index(b)) for a, b in poset.covers())
        lines = [f"elements: {len(poset)}"]
        lines.extend(f"{names[i]} < {names[j]}" for i, j in covers)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        less = sorted(
            (poset.index(a), poset.index(b)) for a, b in poset.relation_pairs()
        )
        doc = {
            "elements": [{"row": e.row, "pos": e.pos} for e in poset.elements],
            "less": [list(pair) for pair in less],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["," + ",".join(names)]
        for i, name in enumerate(names):
            bits = [
                "1" if poset.lt(poset.elements[i], poset.elements[j]) else "0"
                for j in range(len(names))
            ]
            lines.append(name + "," + ",".join(bits))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported poset format {fmt!r}")


def export(obj: AdjMatrix | SkeletonGraph | Poset, fmt: str) -> str:
    if isinstance(obj, AdjMatrix):
        return export_matrix(obj, fmt)
    if isinstance(obj, SkeletonGraph):
        return export_skeleton(obj, fmt)
    if isinstance(obj, Poset):
        return export_poset(obj, fmt)
    raise TypeError(f"cannot export {type(obj).__name__}")
