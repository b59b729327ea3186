"""JSON round-trips for every artifact the CLI exchanges.

Formats (documented in the README):
  complex    {"dims": n, "simplices": [{"dim": k, "faces": [..], "label": ..}..],
              "cycles": {name: {"dim": d, "cells": [..]}}}   (cycles optional)
  matrix     {"rows": r, "cols": c, "entries": [[..], ..]}
  cochain    {"dim": n, "support": [..]}
  code       {"n": .., "hx": [[..]], "hz": [[..]], "logical_x": [..],
              "logical_z": [..], "meta": [..], "extra": {..}}
  circuit    {"n": .., "gates": [["CCZ", [a, b, c]], ..]}
  hypergraph {"kind": "base"|"full", "vertices": [..], "hyperedges": [[..]]}
  form       {"m": m, "coeffs": {"1,2,3": 1, ..}}

All dumps are sorted-key and newline-terminated for diff stability.
"""

from __future__ import annotations

import json

from .complexes import DeltaComplex
from .codes import CssCode
from .gates import DiagonalCircuit
from .gf2 import BitMatrix, support, vec_from_support
from .hypergraph import Hypergraph
from .sullivan import ThreeForm


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write(path: str, obj) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def read(path: str):
    with open(path) as fh:
        return json.load(fh)


# -- complex ---------------------------------------------------------------


def complex_to_json(K: DeltaComplex) -> dict:
    simplices = []
    for n in range(K.dims + 1):
        for s in range(K.n_cells(n)):
            entry: dict = {"dim": n, "faces": list(K.face[n][s])}
            lab = K.labels.get((n, s))
            if lab is not None:
                entry["label"] = lab
            simplices.append(entry)
    out = {"dims": K.dims, "simplices": simplices}
    if K.cycles:
        out["cycles"] = {
            nm: {"dim": d, "cells": list(cells)} for nm, (d, cells) in K.cycles.items()
        }
    return out


def complex_from_json(data: dict) -> DeltaComplex:
    dims = data["dims"]
    face: list[list[tuple[int, ...]]] = [[] for _ in range(dims + 1)]
    labels: dict = {}
    for entry in data["simplices"]:
        n = entry["dim"]
        idx = len(face[n])
        face[n].append(tuple(entry["faces"]))
        if "label" in entry:
            labels[(n, idx)] = entry["label"]
    K = DeltaComplex(face, labels)
    for nm, cyc in data.get("cycles", {}).items():
        K.cycles[nm] = (cyc["dim"], tuple(cyc["cells"]))
    return K


# -- matrices and cochains ---------------------------------------------------


def matrix_to_json(entries: list[list[int]]) -> dict:
    return {"rows": len(entries), "cols": len(entries[0]) if entries else 0, "entries": entries}


def matrix_from_json(data: dict) -> list[list[int]]:
    M = data["entries"]
    assert len(M) == data["rows"]
    return M


def cochain_to_json(dim: int, values: int) -> dict:
    return {"dim": dim, "support": support(values)}


def cochain_from_json(data: dict) -> tuple[int, int]:
    return data["dim"], vec_from_support(data["support"])


# -- codes -------------------------------------------------------------------


def code_to_json(code: CssCode) -> dict:
    extra = {}
    for key in ("kind", "copies", "edges", "labels", "signs"):
        if key in code.meta:
            val = code.meta[key]
            if key == "labels":
                val = [list(v) if isinstance(v, tuple) else v for v in val]
            extra[key] = val
    return {
        "n": code.n,
        "hx": code.hx.to_entries(),
        "hz": code.hz.to_entries(),
        "logical_x": [support(v) for v in code.logical_x],
        "logical_z": [support(v) for v in code.logical_z],
        "meta": [list(q) for q in code.meta.get("qubit", [])],
        "extra": extra,
    }


def code_from_json(data: dict) -> CssCode:
    n = data["n"]
    hx = BitMatrix.from_entries(data["hx"]) if data["hx"] else BitMatrix(0, n)
    hz = BitMatrix.from_entries(data["hz"]) if data["hz"] else BitMatrix(0, n)
    hx.ncols = hz.ncols = n
    meta = {"qubit": [tuple(q) for q in data.get("meta", [])]}
    for key, val in data.get("extra", {}).items():
        if key == "labels":
            val = [tuple(v) if isinstance(v, list) else v for v in val]
        meta[key] = val
    return CssCode(
        n,
        hx,
        hz,
        [vec_from_support(s) for s in data["logical_x"]],
        [vec_from_support(s) for s in data["logical_z"]],
        meta,
    )


# -- circuits -----------------------------------------------------------------


def circuit_to_json(circ: DiagonalCircuit) -> dict:
    return {"n": circ.n, "gates": [[k, list(q)] for k, q in circ.gates]}


def circuit_from_json(data: dict) -> DiagonalCircuit:
    return DiagonalCircuit(data["n"], [(k, tuple(q)) for k, q in data["gates"]])


# -- hypergraphs and forms -----------------------------------------------------


def hypergraph_to_json(h: Hypergraph) -> dict:
    out = {
        "kind": h.kind,
        "vertices": [list(v) if isinstance(v, tuple) else v for v in h.vertices],
        "hyperedges": [[list(v) if isinstance(v, tuple) else v for v in e] for e in h.hyperedges],
    }
    if h.unknown_triples:
        out["unknown"] = [[list(v) if isinstance(v, tuple) else v for v in e] for e in h.unknown_triples]
    return out


def hypergraph_from_json(data: dict) -> Hypergraph:
    def devert(v):
        return tuple(v) if isinstance(v, list) else v

    return Hypergraph(
        data["kind"],
        [devert(v) for v in data["vertices"]],
        [tuple(devert(v) for v in e) for e in data["hyperedges"]],
        [tuple(devert(v) for v in e) for e in data.get("unknown", [])],
    )


def form_to_json(mu: ThreeForm) -> dict:
    return {"m": mu.m, "coeffs": {f"{i},{j},{k}": v for (i, j, k), v in sorted(mu.coeffs.items())}}


def form_from_json(data: dict) -> ThreeForm:
    coeffs = {}
    for key, v in data["coeffs"].items():
        i, j, k = (int(t) for t in key.split(","))
        coeffs[(i, j, k)] = v
    return ThreeForm(data["m"], coeffs)
