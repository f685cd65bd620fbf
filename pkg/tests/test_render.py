"""Diagram emitters and the JSON report document."""

import json
import re

import pytest

from clustercat.render import (
    RenderSpec,
    ar_layout,
    export_json,
    render,
    render_ascii,
    render_dot,
    render_tikz,
)
from clustercat.tilting import TiltingObject, enumerate_tiltings, initial_tilting


def test_render_spec_rejects_unknown_format():
    with pytest.raises(ValueError):
        RenderSpec("svg")


def test_layout_is_injective_and_grid_shaped(category):
    for family, rank in (("A", 3), ("A", 5), ("A", 6), ("D", 4), ("D", 6)):
        cc = category(family, rank)
        pos = ar_layout(cc)
        assert len(set(pos.values())) == len(pos)
        assert {x for x, _y in pos.values()} == set(range(cc.winding))
        assert {y for _x, y in pos.values()} <= set(range(1, rank + 1))


def test_dot_a2_has_five_nodes_and_is_well_formed(category):
    cc = category("A", 2)
    text = render_dot(cc)
    assert text.startswith("digraph ar {")
    assert text.rstrip().endswith("}")
    nodes = re.findall(r"^\s*n(\d+) \[", text, re.M)
    assert len(nodes) == 5
    edges = re.findall(r"^\s*n(\d+) -> n(\d+)", text, re.M)
    assert len(edges) == len(cc.arrows())
    # every edge endpoint is a declared node
    declared = set(nodes)
    assert all(a in declared and b in declared for a, b in edges)
    # node and edge statements are semicolon-terminated
    for line in text.splitlines():
        if "->" in line or "[" in line:
            assert line.rstrip().endswith(";")


def test_dot_marks_tilting_and_highlight(category):
    cc = category("A", 3)
    t = TiltingObject((0, 2, 5))
    spec = RenderSpec("dot", highlight=((2, 1, "blue"),), tilting=t)
    text = render_dot(cc, spec)
    assert text.count("peripheries=2") == 3
    # H(2,1) holds one module beyond the shifted endpoints
    assert text.count('fillcolor="blue"') == 1


def test_highlight_without_tilting_rejected(category):
    cc = category("A", 3)
    with pytest.raises(ValueError):
        render_dot(cc, RenderSpec("dot", highlight=((1, 1, "red"),)))


def test_tikz_structure(category):
    cc = category("A", 2)
    t = initial_tilting(cc)
    text = render_tikz(cc, RenderSpec("tikz", tilting=t))
    assert text.startswith("\\begin{tikzpicture}")
    assert text.rstrip().endswith("\\end{tikzpicture}")
    assert len(re.findall(r"\\node\[", text)) == 5
    assert len(re.findall(r"\\draw\[", text)) == len(cc.arrows())
    assert text.count("double") == 2
    # wrap arrows are dashed; there is at least one per tau-orbit row
    assert "dashed" in text


def test_tikz_highlight_fill(category):
    cc = category("A", 3)
    t = TiltingObject((0, 2, 5))
    text = render_tikz(cc, RenderSpec("tikz", highlight=((2, 1, "blue"),),
                                      tilting=t))
    assert text.count("fill=blue!30") == 1


def test_ascii_grid_covers_every_vertex(category):
    cc = category("D", 4)
    t = initial_tilting(cc)
    text = render_ascii(cc, RenderSpec("ascii", tilting=t))
    for c in cc.cids():
        assert f"{c}:" in text
    assert len(re.findall(r"\[\d+:", text)) == 4  # summand brackets


def test_json_schema_and_byte_stability(category):
    cc = category("A", 3)
    t = initial_tilting(cc)
    doc = export_json(cc, t)
    assert doc == export_json(cc, t)
    data = json.loads(doc)
    assert set(data) == {"meta", "modules", "hammocks", "agreement"}
    assert data["meta"] == {"family": "A", "rank": 3, "orientation": "default",
                            "tilting": list(t.summands)}
    assert [m["cid"] for m in data["modules"]] == sorted(
        m["cid"] for m in data["modules"])
    for m in data["modules"]:
        assert set(m) == {"cid", "dim_vector", "pd", "in_hij"}
        assert m["pd"] in ("0", "1", "inf")
        assert len(m["dim_vector"]) == 3
    assert len(data["hammocks"]) == 9
    for h in data["hammocks"]:
        assert set(h) == {"i", "j", "shape", "vertices"}
        assert h["vertices"] == sorted(h["vertices"])
    # re-serializing the parsed document reproduces the bytes
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == doc


def test_json_hereditary_a2_agreement_and_no_infinite(category):
    cc = category("A", 2)
    data = json.loads(export_json(cc, initial_tilting(cc)))
    assert data["agreement"] is True
    assert all(m["pd"] != "inf" for m in data["modules"])


def test_json_a3_cycle_has_three_infinite(category):
    cc = category("A", 3)
    data = json.loads(export_json(cc, TiltingObject((0, 2, 5))))
    infinite = [m for m in data["modules"] if m["pd"] == "inf"]
    assert len(infinite) == 3
    assert {m["cid"] for m in infinite} == {1, 4, 7}
    # each infinite module sits in at least one hammock pair
    assert all(m["in_hij"] for m in infinite)
    finite = [m for m in data["modules"] if m["pd"] != "inf"]
    assert all(not m["in_hij"] for m in finite)


def test_json_membership_matches_hammock_lists(category):
    cc = category("D", 4)
    for t in enumerate_tiltings(cc)[:4]:
        data = json.loads(export_json(cc, t))
        by_pair = {(h["i"], h["j"]): set(h["vertices"]) for h in data["hammocks"]}
        shifted = {cc.shift(s) for s in t.summands}
        for m in data["modules"]:
            expect = sorted(
                [i, j] for (i, j), verts in by_pair.items()
                if m["cid"] in verts - shifted
            )
            assert m["in_hij"] == expect


def test_render_dispatch(category):
    cc = category("A", 2)
    t = initial_tilting(cc)
    for fmt in ("dot", "tikz", "ascii", "json"):
        text = render(cc, RenderSpec(fmt, tilting=t))
        assert text.endswith("\n")
    with pytest.raises(ValueError):
        render(cc, RenderSpec("json"))
