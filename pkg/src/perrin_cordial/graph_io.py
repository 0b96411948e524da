"""JSON serialization for graphs and labelings, and figure-style DOT export.

Parsing is strict but purely structural: a labeling file with a duplicate
index parses fine and fails later at verification, so format errors and
semantic failures surface through different exit paths.
"""

from __future__ import annotations

import json

from .graphs import FamilySpec, Graph
from .labeling import PerrinLabeling, is_valid, to_parity
from .perrin import Parity

# figure convention: red for even (vertices and 0-labeled edges), black
# for odd (vertices and 1-labeled edges)
EVEN_COLOR = "red"
ODD_COLOR = "black"


class FormatError(ValueError):
    """Malformed JSON or schema violation, with a field diagnostic."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("json", f"malformed at line {exc.lineno} column {exc.colno}: {exc.msg}")


def _require_int(obj: object, field: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise FormatError(field, f"expected an integer, got {obj!r}")
    return obj


def write_graph(g: Graph) -> str:
    doc: dict = {
        "vertex_count": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "roles": {str(v): g.roles[v] for v in range(g.vertex_count)},
    }
    if g.family is not None:
        doc["family"] = {"name": g.family.name, "params": list(g.family.params)}
    return json.dumps(doc, indent=2) + "\n"


def read_graph(text: str) -> Graph:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise FormatError("document", "expected a JSON object")
    if "vertex_count" not in doc:
        raise FormatError("vertex_count", "missing")
    n = _require_int(doc["vertex_count"], "vertex_count")
    if n < 0:
        raise FormatError("vertex_count", "must be >= 0")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise FormatError("edges", "expected a list of [u, v] pairs")
    edges = []
    for i, e in enumerate(raw_edges):
        if not (isinstance(e, list) and len(e) == 2):
            raise FormatError(f"edges[{i}]", f"expected a [u, v] pair, got {e!r}")
        u = _require_int(e[0], f"edges[{i}][0]")
        v = _require_int(e[1], f"edges[{i}][1]")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edges[{i}]", f"edge [{u}, {v}] out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"edges[{i}]", f"self-loop at vertex {u}")
        edges.append((u, v))
    roles = None
    if "roles" in doc and doc["roles"] is not None:
        raw_roles = doc["roles"]
        if not isinstance(raw_roles, dict):
            raise FormatError("roles", "expected an object mapping vertex id to role")
        roles = ["generic"] * n
        for key, val in raw_roles.items():
            try:
                v = int(key)
            except ValueError:
                raise FormatError(f"roles[{key!r}]", "vertex key must be an integer")
            if not (0 <= v < n):
                raise FormatError(f"roles[{key!r}]", f"vertex {v} out of range 0..{n - 1}")
            roles[v] = val
    family = None
    if "family" in doc and doc["family"] is not None:
        fam = doc["family"]
        if not (isinstance(fam, dict) and "name" in fam and "params" in fam):
            raise FormatError("family", "expected an object with name and params")
        params = tuple(_require_int(p, "family.params") for p in fam["params"])
        family = FamilySpec(fam["name"], params)
    try:
        return Graph(n, tuple(edges), tuple(roles) if roles else (), family)
    except ValueError as exc:
        raise FormatError("graph", str(exc))


def write_labeling(f: PerrinLabeling) -> str:
    doc = {
        "domain_max": f.domain_max,
        "assignment": [
            {"vertex": v, "index": f.assignment[v]} for v in sorted(f.assignment)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def read_labeling(text: str) -> PerrinLabeling:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise FormatError("document", "expected a JSON object")
    if "domain_max" not in doc:
        raise FormatError("domain_max", "missing")
    domain_max = _require_int(doc["domain_max"], "domain_max")
    raw = doc.get("assignment", [])
    if not isinstance(raw, list):
        raise FormatError("assignment", "expected a list of {vertex, index} entries")
    assignment: dict[int, int] = {}
    for i, entry in enumerate(raw):
        if not (isinstance(entry, dict) and "vertex" in entry and "index" in entry):
            raise FormatError(f"assignment[{i}]", f"expected {{vertex, index}}, got {entry!r}")
        v = _require_int(entry["vertex"], f"assignment[{i}].vertex")
        idx = _require_int(entry["index"], f"assignment[{i}].index")
        if v in assignment:
            raise FormatError(f"assignment[{i}]", f"vertex {v} listed twice")
        assignment[v] = idx
    return PerrinLabeling(assignment=assignment, domain_max=domain_max)


def export_dot(g: Graph, f: PerrinLabeling) -> str:
    """Figure-style DOT text: red for even labels, black for odd.

    Vertices carry their sequence-index name (P_i); edges are colored by
    their induced label (0 red, 1 black).  Output is byte-stable for
    identical inputs.
    """
    if not is_valid(g, f):
        raise ValueError("labeling is not valid for this graph")
    pattern = to_parity(f)
    lines = ["graph {", "  node [shape=circle];"]
    for v in range(g.vertex_count):
        color = EVEN_COLOR if pattern[v] is Parity.EVEN else ODD_COLOR
        lines.append(f'  {v} [label="P_{f.assignment[v]}" color={color} fontcolor={color}];')
    for u, v in g.edges:
        color = EVEN_COLOR if pattern[u] is pattern[v] else ODD_COLOR
        lines.append(f"  {u} -- {v} [color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
