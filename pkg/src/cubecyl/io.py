"""Complex files (JSON) and DOT export.

A complex file is a JSON object::

    {"name": "grid(2,2)", "vertices": 9, "edges": [[0, 1], ...],
     "automorphisms": [[...], ...]}

``name`` and ``automorphisms`` are optional.  :func:`dumps_complex` writes the
canonical form: keys in the order above, edges sorted with each pair ascending,
one automorphism per line.
"""
import json
from pathlib import Path

from .complex import build_complex


class ComplexFileError(ValueError):
    pass


def parse_complex(text):
    """Parse and type-check a complex document; returns ``(n, edges, name, autos)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFileError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ComplexFileError("top level must be an object")
    unknown = set(doc) - {"name", "vertices", "edges", "automorphisms"}
    if unknown:
        raise ComplexFileError(f"unknown fields: {', '.join(sorted(unknown))}")
    n = doc.get("vertices")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ComplexFileError("'vertices' must be a positive integer")
    edges = doc.get("edges", [])
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(type(v) is int for v in e) for e in edges):
        raise ComplexFileError("'edges' must be a list of 2-element integer arrays")
    autos = doc.get("automorphisms", [])
    if not isinstance(autos, list) or not all(
            isinstance(p, list) and len(p) == n and all(type(v) is int for v in p) for p in autos):
        raise ComplexFileError(f"'automorphisms' must be a list of {n}-element integer arrays")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ComplexFileError("'name' must be a string")
    return n, [tuple(e) for e in edges], name, autos


def loads_complex(text):
    n, edges, name, autos = parse_complex(text)
    return build_complex(n, edges, name=name, automorphisms=autos)


def load_complex(path):
    return loads_complex(Path(path).read_text())


def _canonical_doc(n, edges, name=None, automorphisms=()):
    edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    lines = ["{"]
    if name is not None:
        lines.append(f'  "name": {json.dumps(name)},')
    lines.append(f'  "vertices": {n},')
    body = ", ".join(f"[{u}, {v}]" for u, v in edges)
    if automorphisms:
        lines.append(f'  "edges": [{body}],')
        lines.append('  "automorphisms": [')
        rows = ["    [" + ", ".join(str(int(v)) for v in p) + "]" for p in automorphisms]
        lines.append(",\n".join(rows))
        lines.append("  ]")
    else:
        lines.append(f'  "edges": [{body}]')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_complex(C):
    return _canonical_doc(C.n, C.edges, C.name, C.automorphisms)


def canonicalize(text):
    """Canonical form of a complex document, without median validation."""
    n, edges, name, autos = parse_complex(text)
    return _canonical_doc(n, edges, name, autos)


def save_complex(C, path):
    Path(path).write_text(dumps_complex(C))


# -- DOT -------------------------------------------------------------------------

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def to_dot(C, cylinder=None, interval=None, endpoints=None):
    """DOT text; edges coloured by hyperplane, cylinder vertices filled,
    interval vertices double-ringed, endpoints drawn as boxes."""
    name = (C.name or "complex").replace('"', "'")
    out = [f'graph "{name}" {{', "  node [shape=circle, fontsize=10];"]
    ends = set(endpoints or ())
    for v in range(C.n):
        attrs = [f'label="{v}"']
        if cylinder is not None and cylinder[v]:
            attrs.append('style=filled, fillcolor="#9ecae1"')
        if interval is not None and interval[v]:
            attrs.append("peripheries=2")
        if v in ends:
            attrs.append("shape=box")
        out.append(f"  {v} [{', '.join(attrs)}];")
    for (u, v), j in zip(C.edges, C.edge_class):
        out.append(f'  {u} -- {v} [color="{PALETTE[j % len(PALETTE)]}", label="h{j}", fontsize=8];')
    out.append("}")
    return "\n".join(out) + "\n"
