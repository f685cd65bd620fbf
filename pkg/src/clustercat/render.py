"""Diagram emitters and the JSON report document.

The AR quiver of the cluster category is drawn on a grid: column = height
of the vertex in the mesh walk, row = the diagram vertex heading the
tau-orbit (shifted projectives share the row of their projective).  Arrows
wrapping from the last column back to the first are drawn dashed.

Supported formats: DOT, TikZ, ASCII, and a JSON document that serializes a
full verification run (modules with pd classes and hammock memberships).
"""

import json
from dataclasses import dataclass

from .algebra import build_algebra, module_of, pd_class
from .cluster import ClusterCategory
from .hammocks import hij, hij_membership, verify_main_theorem
from .tilting import TiltingObject

FORMATS = ("dot", "tikz", "json", "ascii")


@dataclass
class RenderSpec:
    format: str = "dot"
    # (i, j, color) triples; colors the modules of H(i,j) outside add T[1]
    highlight: tuple = ()
    tilting: TiltingObject = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(
                "unknown format %r, expected one of %s" % (self.format, FORMATS)
            )


def _orbit_row(cc, c):
    """Strip row of a tau-orbit: the orbit of the module it contains."""
    cur = c
    for _ in range(len(cc.indecs)):
        ind = cc.indecs[cur]
        if ind.kind == "mod":
            return cc.mod.indecs[ind.mid].orbit
        cur = cc.tau[cur]
    raise RuntimeError("tau-orbit without modules")


def _flip(cc, row):
    """The diagram symmetry; the strip wrap may act by it on rows."""
    n = cc.quiver.rank
    if cc.quiver.family == "A":
        return n + 1 - row
    if row in (n - 1, n):
        return 2 * n - 1 - row
    return row


def ar_layout(cc: ClusterCategory):
    """cid -> (column, row) grid positions.

    Column = mesh height, row = tau-orbit.  The wrap can identify rows
    across the seam (the type A strip is a Moebius band), so two objects
    may claim one cell; the later one moves to the flipped row if free,
    else to the nearest free row.  Columns never hold more objects than
    there are rows, so this always lands.
    """
    n = cc.quiver.rank
    pos = {}
    taken = set()
    for c in cc.cids():
        x, y = cc.height[c], _orbit_row(cc, c)
        if (x, y) in taken:
            options = [r for r in range(1, n + 1) if (x, r) not in taken]
            y = min(options,
                    key=lambda r: (r != _flip(cc, y), abs(r - y), r))
        taken.add((x, y))
        pos[c] = (x, y)
    return pos


def _vertex_label(cc, c):
    ind = cc.indecs[c]
    if ind.kind == "shift":
        return "P%d[1]" % ind.vertex
    return "".join(str(d) for d in ind.dim)


def _highlight_map(cc, spec: RenderSpec):
    """cid -> color from a RenderSpec's (i, j, color) highlight triples."""
    colors = {}
    if not spec.highlight:
        return colors
    if spec.tilting is None:
        raise ValueError("highlighting hammocks requires a tilting")
    shifted = {cc.shift(s) for s in spec.tilting.summands}
    for i, j, color in spec.highlight:
        for c in sorted(hij(cc, spec.tilting, i, j).vertices - shifted):
            colors.setdefault(c, color)
    return colors


def _wrapping(cc, x, y):
    return cc.height[y] != cc.height[x] + 1


def render_dot(cc: ClusterCategory, spec: RenderSpec = None) -> str:
    spec = spec or RenderSpec("dot")
    colors = _highlight_map(cc, spec)
    summands = set(spec.tilting.summands) if spec.tilting else set()
    out = ["digraph ar {", "  rankdir=LR;", "  node [shape=box];"]
    for c in cc.cids():
        attrs = ['label="%s"' % _vertex_label(cc, c)]
        if c in summands:
            attrs.append("peripheries=2")
        if c in colors:
            attrs.append("style=filled")
            attrs.append('fillcolor="%s"' % colors[c])
        out.append("  n%d [%s];" % (c, ", ".join(attrs)))
    for x, y in cc.arrows():
        if _wrapping(cc, x, y):
            out.append("  n%d -> n%d [style=dashed, constraint=false];" % (x, y))
        else:
            out.append("  n%d -> n%d;" % (x, y))
    out.append("}")
    return "\n".join(out) + "\n"


def render_tikz(cc: ClusterCategory, spec: RenderSpec = None) -> str:
    spec = spec or RenderSpec("tikz")
    colors = _highlight_map(cc, spec)
    summands = set(spec.tilting.summands) if spec.tilting else set()
    pos = ar_layout(cc)
    out = [
        "\\begin{tikzpicture}[x=1.4cm, y=1.1cm, every node/.style={font=\\small}]"
    ]
    for c in cc.cids():
        x, y = pos[c]
        styles = ["draw"]
        if c in summands:
            styles.append("double")
        if c in colors:
            styles.append("fill=%s!30" % colors[c])
        out.append(
            "  \\node[%s] (n%d) at (%d, %d) {$%s$};"
            % (", ".join(styles), c, x, -y, _vertex_label(cc, c))
        )
    for x, y in cc.arrows():
        style = "->, dashed" if _wrapping(cc, x, y) else "->"
        out.append("  \\draw[%s] (n%d) -- (n%d);" % (style, x, y))
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render_ascii(cc: ClusterCategory, spec: RenderSpec = None) -> str:
    """Grid of vertex labels, one row per tau-orbit, one column per height.

    Tilting summands are bracketed, highlighted vertices are starred.
    """
    spec = spec or RenderSpec("ascii")
    colors = _highlight_map(cc, spec)
    summands = set(spec.tilting.summands) if spec.tilting else set()
    pos = ar_layout(cc)
    rows = sorted({r for _c, (_x, r) in pos.items()})
    cols = sorted({x for _c, (x, _r) in pos.items()})
    cells = {}
    for c, (x, r) in pos.items():
        label = "%d:%s" % (c, _vertex_label(cc, c))
        if c in summands:
            label = "[%s]" % label
        if c in colors:
            label += "*"
        cells[(x, r)] = label
    width = max(len(v) for v in cells.values()) + 2
    lines = []
    for r in rows:
        lines.append(
            "".join(cells.get((x, r), "").ljust(width) for x in cols).rstrip()
        )
    legend = ["rows: tau-orbits by diagram vertex; cols: mesh heights"]
    if summands:
        legend.append("[x]: tilting summand")
    if colors:
        legend.append("x*: highlighted hammock module")
    return "\n".join(lines + legend) + "\n"


def export_json(cc: ClusterCategory, tilting: TiltingObject,
                orientation: str = "default") -> str:
    """Byte-stable JSON document for a verification run over one tilting."""
    report = verify_main_theorem(cc, tilting)
    alg = build_algebra(cc, tilting)
    shifted = {cc.shift(s) for s in tilting.summands}
    n = len(tilting.summands)
    modules = []
    for m in cc.cids():
        if m in shifted:
            continue
        mod = module_of(alg, m)
        modules.append(
            {
                "cid": m,
                "dim_vector": [mod.dims[k] for k in range(1, n + 1)],
                "pd": pd_class(mod).value,
                "in_hij": [list(p) for p in hij_membership(cc, tilting, m)],
            }
        )
    hammocks = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            h = hij(cc, tilting, i, j)
            hammocks.append(
                {
                    "i": i,
                    "j": j,
                    "shape": str(h.shape) if h.shape is not None else None,
                    "vertices": sorted(h.vertices),
                }
            )
    doc = {
        "meta": {
            "family": cc.quiver.family,
            "rank": cc.quiver.rank,
            "orientation": orientation,
            "tilting": list(tilting.summands),
        },
        "modules": modules,
        "hammocks": hammocks,
        "agreement": report.agreement,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render(cc: ClusterCategory, spec: RenderSpec,
           orientation: str = "default") -> str:
    if spec.format == "dot":
        return render_dot(cc, spec)
    if spec.format == "tikz":
        return render_tikz(cc, spec)
    if spec.format == "ascii":
        return render_ascii(cc, spec)
    if spec.tilting is None:
        raise ValueError("JSON export requires a tilting")
    return export_json(cc, spec.tilting, orientation)
