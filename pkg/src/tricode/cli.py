"""Command-line front end: builders, homology, cup integrals, codes, gates,
mapping-class-group tools, hypergraphs, back-engineering, and a manifest
runner for reproducible pipelines.

All JSON outputs are sorted-key and newline-terminated, so identical
manifests produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import codes, complexes, cup, gates, homology, hypergraph, mcg, serialize, snf, sullivan
from .gf2 import support


def _emit(args, obj, text: str | None = None) -> None:
    out = getattr(args, "out", None)
    if out:
        serialize.write(out, obj)
        return
    if getattr(args, "format", "text") == "json" or text is None:
        sys.stdout.write(serialize.dumps(obj))
    else:
        print(text)


def _load_complex(path: str) -> complexes.DeltaComplex:
    return serialize.complex_from_json(serialize.read(path))


# ---------------------------------------------------------------------------
# complex
# ---------------------------------------------------------------------------


def _build_preset(preset: str, twist_file: str | None):
    if preset == "t3":
        return complexes.build_torus3()
    if preset == "point":
        return complexes.build_point()
    if preset.startswith("circle:"):
        return complexes.product_with_circle(complexes.build_point(), int(preset.split(":")[1]))
    if preset.startswith("sigma-rot:"):
        return complexes.build_sigma_g_rotsym(int(preset.split(":")[1]))
    if preset.startswith("sigma:"):
        return complexes.build_sigma_g(int(preset.split(":")[1]))
    if preset.startswith("product:"):
        g, layers = (int(t) for t in preset.split(":")[1].split(","))
        return complexes.product_with_circle(complexes.build_sigma_g(g), layers)
    if preset == "mapping-torus":
        if not twist_file:
            raise SystemExit("--twist FILE is required for the mapping-torus preset")
        spec = serialize.read(twist_file)
        layers = spec.get("layers", 1)
        if "base_file" in spec:
            base = _load_complex(spec["base_file"])
        else:
            base = _build_preset(spec["base_preset"], None)
        kind = spec.get("kind", "identity")
        if kind == "identity":
            phi = complexes.SimplicialAutomorphism.identity(base)
        elif kind == "rotation":
            g = int(spec["base_preset"].split(":")[1])
            phi = complexes.rotation_automorphism(base, g, spec.get("handles", 1))
        elif kind == "perm":
            phi = complexes.SimplicialAutomorphism([list(p) for p in spec["perm"]])
        else:
            raise SystemExit(f"unknown twist kind {kind!r}")
        return complexes.mapping_torus(base, phi, layers)
    raise SystemExit(f"unknown preset {preset!r}")


def cmd_complex(args) -> int:
    if args.action == "build":
        K = _build_preset(args.preset, args.twist)
        _emit(args, serialize.complex_to_json(K),
              f"built {args.preset}: counts {K.counts}")
        return 0
    K = _load_complex(args.file)
    if args.action == "validate":
        bad = complexes.validate(K)
        report = {"valid": not bad, "violations": bad, "counts": K.counts,
                  "closed": complexes.is_closed(K)}
        text = "well-formed" if not bad else "\n".join(bad)
        _emit(args, report, text)
        return 0 if not bad else 1
    if args.action == "subdivide":
        sub = complexes.barycentric_subdivide(K)
        _emit(args, serialize.complex_to_json(sub.complex),
              f"subdivision counts {sub.complex.counts}")
        return 0
    raise SystemExit(f"unknown complex action {args.action!r}")


# ---------------------------------------------------------------------------
# homology / snf / cup
# ---------------------------------------------------------------------------


def cmd_homology(args) -> int:
    K = _load_complex(args.file)
    if args.action == "betti":
        if args.dim is not None:
            b = homology.betti(K, args.dim)
            _emit(args, {"dim": args.dim, "betti": b}, f"b_{args.dim} = {b}")
        else:
            bs = homology.betti_all(K)
            _emit(args, {"betti": list(bs)}, "betti: " + " ".join(map(str, bs)))
        return 0
    if args.action == "basis":
        hb = homology.homology_basis(K, args.dim)
        obj = {
            "dim": args.dim,
            "cycles": [support(z) for z in hb.cycles],
            "cocycles": [support(c) for c in hb.cocycles],
            "pairing": "identity",
        }
        _emit(args, obj, f"rank {hb.rank} basis with identity pairing")
        return 0
    raise SystemExit(f"unknown homology action {args.action!r}")


def cmd_snf(args) -> int:
    M = serialize.matrix_from_json(serialize.read(args.file))
    res = snf.smith_normal_form(M)
    obj = {"diagonal": res.diagonal, "P": res.P, "Q": res.Q}
    _emit(args, obj, "diagonal: " + " ".join(map(str, res.diagonal)))
    return 0


def cmd_cup(args) -> int:
    K = _load_complex(args.file)
    if args.action == "triple":
        basis = cup.canonical_cocycle_basis(K, 1)
        i, j, k = (int(t) for t in args.cocycles.split(","))
        v = cup.triple_cup_integral(K, basis[i], basis[j], basis[k])
        _emit(args, {"cocycles": [i, j, k], "integral": v}, f"integral = {v}")
        return 0
    if args.action == "form":
        if K.dims == 2:
            M = cup.surface_intersection_form(K)
            _emit(args, {"intersection_form": M},
                  "\n".join(" ".join(map(str, row)) for row in M))
            return 0
        form = hypergraph.form_from_cup(K)
        obj = {
            "labels": form.labels,
            "coeffs": {",".join(map(str, sorted(t))): v
                       for t, v in form.coefficients.items()},
            "unit_triples": [list(t) for t in form.known_unit_triples()],
        }
        _emit(args, obj, f"labels {form.labels}; unit triples {form.known_unit_triples()}")
        return 0
    raise SystemExit(f"unknown cup action {args.action!r}")


# ---------------------------------------------------------------------------
# code / gate
# ---------------------------------------------------------------------------


def cmd_code(args) -> int:
    if args.action == "build":
        K = _load_complex(args.file)
        if args.type.startswith("toric"):
            copies = int(args.type.split(":")[1]) if ":" in args.type else 1
            code = codes.toric_code(K, copies)
        elif args.type == "color":
            code = codes.color_code(K)
        else:
            raise SystemExit(f"unknown code type {args.type!r}")
        _emit(args, serialize.code_to_json(code), f"n={code.n} k={code.k}")
        return 0
    if args.action == "distance":
        code = serialize.code_from_json(serialize.read(args.file))
        method = {"bfs": "systole-bfs"}.get(args.method, args.method)
        if method == "systole-bfs":
            code.meta["complex"] = _load_complex(args.complex)
        res = codes.distance(code, method, budget=args.budget, sector=args.sector)
        obj = {"dx": res.dx, "dz": res.dz, "flag": res.flagged(), "note": res.note}
        _emit(args, obj, f"d_x={res.dx} d_z={res.dz} [{res.flagged()}]")
        return 0
    raise SystemExit(f"unknown code action {args.action!r}")


def cmd_gate(args) -> int:
    if args.action == "ccz":
        K = _load_complex(args.file)
        circ = gates.ccz_circuit(K)
        _emit(args, serialize.circuit_to_json(circ),
              f"{len(circ.gates)} CCZ gates on {circ.n} qubits")
        return 0
    if args.action == "cz":
        K = _load_complex(args.file)
        dim, z = serialize.cochain_from_json(serialize.read(args.membrane))
        if dim != 2:
            raise SystemExit("membrane file must hold a 2-cycle")
        i, j = (int(t) for t in args.copies.split(","))
        circ = gates.cz_membrane_circuit(K, z, (i, j))
        _emit(args, serialize.circuit_to_json(circ),
              f"{len(circ.gates)} CZ gates on {circ.n} qubits")
        return 0
    if args.action == "t":
        code = serialize.code_from_json(serialize.read(args.file))
        circ = gates.transversal_t(code)
        plus = sum(1 for k, _ in circ.gates if k == "T")
        _emit(args, serialize.circuit_to_json(circ),
              f"{len(circ.gates)} gates ({plus} T, {len(circ.gates) - plus} Tdg)")
        return 0
    circ = serialize.circuit_from_json(serialize.read(args.circuit))
    code = serialize.code_from_json(serialize.read(args.code))
    if args.action == "check":
        chk = gates.check_logical_gate(circ, code)
        obj = {"status": chk.status, "mode": chk.mode, "detail": chk.detail}
        _emit(args, obj, f"{chk.status} ({chk.mode}) {chk.detail}".rstrip())
        return 0 if chk.passed else 1
    if args.action == "action":
        act = gates.extract_logical_action(circ, code)
        gl = [[k, [list(q) if isinstance(q, tuple) else q for q in qs]] for k, qs in act.gate_list()]
        _emit(args, {"k": act.k, "gates": gl},
              "\n".join(f"{k} {qs}" for k, qs in act.gate_list()) or "identity")
        return 0
    if args.action == "simulate":
        plus = list(range(code.k)) if args.plus == "all" else [int(t) for t in args.plus.split(",") if t]
        fixed = int(args.fixed, 2) if args.fixed else 0
        state = gates.coset_simulate(circ, code, plus, fixed).normalized()
        obj = {"phases": {str(v): p for v, p in sorted(state.phases.items())}}
        _emit(args, obj, f"{len(state.phases)} basis strings")
        return 0
    raise SystemExit(f"unknown gate action {args.action!r}")


# ---------------------------------------------------------------------------
# mcg / hypergraph / sullivan
# ---------------------------------------------------------------------------


def cmd_mcg(args) -> int:
    if args.action == "twist":
        g = args.genus
        if ":" in args.curve:
            vec = mcg.curve_class(args.curve, g)
        else:
            vec = [int(t) for t in args.curve.split(",")]
        M = mcg.dehn_twist_matrix(vec, g)
        _emit(args, serialize.matrix_to_json(M), "\n".join(" ".join(map(str, r)) for r in M))
        return 0
    if args.action == "torus-homology":
        M = serialize.matrix_from_json(serialize.read(args.matrix))
        if args.coeff.lower() == "z":
            h = mcg.mapping_torus_homology(M, "Z")
            _emit(args, {"free_rank": h.free_rank, "torsion": h.torsion,
                         "snf": h.snf_diagonal}, f"H_1 = {h.describe()}")
        else:
            b1 = mcg.mapping_torus_homology(M, "Z2")
            _emit(args, {"b1_mod2": b1}, f"b_1(Z2) = {b1}")
        return 0
    if args.action == "thurston":
        N = serialize.matrix_from_json(serialize.read(args.n))
        res = mcg.thurston(N, args.word.split())
        obj = {
            "nu": res.nu,
            "trace": res.trace,
            "pseudo_anosov": res.is_pseudo_anosov,
            "stretch": res.stretch_factor,
        }
        if args.genus and res.stretch_factor:
            obj["volume_bound"] = res.volume_upper_bound(args.genus)
        text = (
            f"nu~{res.nu:.4f} stretch~{res.stretch_factor:.4f} pA=yes"
            if res.is_pseudo_anosov
            else f"nu~{res.nu:.4f} pA=no (|trace| = {abs(res.trace):.4f} <= 2)"
        )
        _emit(args, obj, text)
        return 0
    if args.action == "thickened":
        act = mcg.twist_sequence_action(args.sequence.split(), args.genus)
        labs = act.labels()
        obj = {
            "labels": labs,
            "matrix_columns": [support(c) for c in act.matrix],
            "cnots": [list(c) for c in act.cnots],
        }
        moved = [
            f"{labs[j]} -> " + " + ".join(labs[i] for i in support(act.matrix[j]))
            for j in range(len(labs))
            if act.matrix[j] != 1 << j
        ]
        _emit(args, obj, "\n".join(moved) if moved else "identity on the membrane basis")
        return 0
    raise SystemExit(f"unknown mcg action {args.action!r}")


def _load_form(path: str) -> mcg.TripleForm:
    data = serialize.read(path)
    if "m" in data:
        return serialize.form_from_json(data).mod2()
    form = mcg.TripleForm(list(data["labels"]))
    for key, v in data.get("coeffs", {}).items():
        idx = frozenset(int(t) for t in key.split(","))
        form.coefficients[idx] = v if v in (0, 1) else mcg.UNKNOWN
    return form


def cmd_hypergraph(args) -> int:
    if args.action == "build":
        form = _load_form(args.file)
        h = hypergraph.base_hypergraph(form)
        if args.lift:
            h = hypergraph.lift_full(h)
        if args.export == "dot":
            text = hypergraph.to_dot(h)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        kappa = hypergraph.magic_state_complexity(h) if h.kind == "full" else None
        obj = serialize.hypergraph_to_json(h)
        text = f"{len(h.vertices)} vertices, {len(h.hyperedges)} hyperedges"
        if kappa is not None:
            text += f", kappa={kappa}"
        _emit(args, obj, text)
        return 0
    if args.action == "degrees":
        h = serialize.hypergraph_from_json(serialize.read(args.file))
        rep = hypergraph.degree_report(h)
        obj = {
            "histogram": {str(k): v for k, v in sorted(rep.histogram.items())},
            "max_degree": rep.max_degree,
            "star_like": rep.star_like,
        }
        _emit(args, obj, rep.text())
        return 0
    raise SystemExit(f"unknown hypergraph action {args.action!r}")


def cmd_sullivan(args) -> int:
    mu = serialize.form_from_json(serialize.read(args.file))
    if args.action == "synth":
        res = sullivan.synthesize(mu)
        obj = {
            "tau": res.tau,
            "m": res.m,
            "fixes_kernel": res.fixes_kernel_lattice(),
            "predicted_unit_triples": [list(t) for t in res.predicted_form.known_unit_triples()],
        }
        _emit(args, obj, f"tau is {2 * res.m}x{2 * res.m}; "
                         f"{len(res.predicted_form.known_unit_triples())} unit triples")
        return 0
    if args.action == "roundtrip":
        rep = sullivan.roundtrip_check(mu)
        _emit(args, {"passed": rep.passed, "failures": rep.failures},
              "PASS" if rep.passed else "FAIL:\n" + "\n".join(rep.failures))
        return 0 if rep.passed else 1
    raise SystemExit(f"unknown sullivan action {args.action!r}")


# ---------------------------------------------------------------------------
# report / manifest
# ---------------------------------------------------------------------------


def cmd_report(args) -> int:
    data = serialize.read(args.file)
    if "hx" in data:
        code = serialize.code_from_json(data)
        res = codes.distance(code, "exact", budget=args.budget, sector="z")
        flag = "exact" if res.exact else "bound"
        text = f"n={code.n} k={code.k} d_z={res.dz}({flag})"
        obj = {"n": code.n, "k": code.k, "dz": res.dz, "flag": flag}
    elif "nu" in data:
        pa = "yes" if data.get("pseudo_anosov") else "no"
        text = f"nu~{data['nu']:.4f} stretch~{data.get('stretch') or float('nan'):.4f} pA={pa}"
        obj = data
    elif "hyperedges" in data:
        h = serialize.hypergraph_from_json(data)
        text = f"{len(h.vertices)} vertices, {len(h.hyperedges)} hyperedges"
        obj = {"vertices": len(h.vertices), "hyperedges": len(h.hyperedges)}
        if h.kind == "full":
            kappa = hypergraph.magic_state_complexity(h)
            text += f", kappa={kappa}"
            obj["kappa"] = kappa
    else:
        raise SystemExit("unknown subject: expected a code, thurston, or hypergraph file")
    _emit(args, obj, text)
    return 0


def _dig(obj, path: str):
    cur = obj
    for part in path.split("."):
        if part == "#":
            return len(cur)
        if isinstance(cur, list):
            cur = cur[int(part)]
        else:
            cur = cur[part]
    return cur


def run_manifest(path: str) -> tuple[int, list[str]]:
    """Execute a pipeline manifest: run each step through the CLI in-process,
    then diff outputs against the expected-values table."""
    manifest = serialize.read(path)
    lines: list[str] = []
    steps = manifest.get("steps", [])
    expects = manifest.get("expect", [])
    if not steps and not expects:
        lines.append("warning: empty manifest (PASS, zero checks)")
        return 0, lines
    for i, step in enumerate(steps):
        rc = main([str(t) for t in step])
        if rc != 0:
            lines.append(f"step {i} failed (exit {rc}): {' '.join(step)}")
            return rc, lines
        lines.append(f"step {i} ok: {' '.join(step)}")
    failures = 0
    for exp in expects:
        fname = exp["file"]
        tag = exp.get("provenance", "")
        if not os.path.exists(fname):
            lines.append(f"FAIL {fname}: missing file")
            failures += 1
            continue
        try:
            got = _dig(serialize.read(fname), exp["path"])
        except (KeyError, IndexError, ValueError):
            lines.append(f"FAIL {fname}:{exp['path']}: path not found")
            failures += 1
            continue
        want = exp["value"]
        tol = exp.get("tol", 0)
        ok = (
            abs(got - want) <= tol
            if isinstance(want, (int, float)) and not isinstance(want, bool) and tol
            else got == want
        )
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        lines.append(f"{status} {fname}:{exp['path']} = {got!r} (expected {want!r}) [{tag}]")
    return (1 if failures else 0), lines


def cmd_manifest(args) -> int:
    rc, lines = run_manifest(args.file)
    for line in lines:
        print(line)
    return rc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tricode", description=__doc__)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write JSON result to this file")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("complex")
    c.add_argument("action", choices=("build", "validate", "subdivide"))
    c.add_argument("file", nargs="?", help="complex JSON (for validate/subdivide)")
    c.add_argument("--preset", help="t3 | sigma:g | sigma-rot:g | product:g,layers | circle:n | mapping-torus")
    c.add_argument("--twist", help="twist spec JSON for mapping-torus")
    common(c)
    c.set_defaults(func=cmd_complex)

    h = sub.add_parser("homology")
    h.add_argument("action", choices=("betti", "basis"))
    h.add_argument("file")
    h.add_argument("--dim", type=int, default=None)
    common(h)
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("snf")
    s.add_argument("file", help="matrix JSON")
    common(s)
    s.set_defaults(func=cmd_snf)

    cu = sub.add_parser("cup")
    cu.add_argument("action", choices=("triple", "form"))
    cu.add_argument("file")
    cu.add_argument("--cocycles", help="i,j,k indices into the canonical H^1 basis")
    common(cu)
    cu.set_defaults(func=cmd_cup)

    cd = sub.add_parser("code")
    cd.add_argument("action", choices=("build", "distance"))
    cd.add_argument("file")
    cd.add_argument("--type", default="toric:1", help="toric:copies | color")
    cd.add_argument("--method", default="exact", choices=("exact", "bfs", "systole-bfs"))
    cd.add_argument("--sector", default="both", choices=("both", "x", "z"))
    cd.add_argument("--budget", type=int, default=1 << 22)
    cd.add_argument("--complex", help="complex JSON for systole-bfs")
    common(cd)
    cd.set_defaults(func=cmd_code)

    g = sub.add_parser("gate")
    g.add_argument("action", choices=("ccz", "cz", "t", "check", "action", "simulate"))
    g.add_argument("file", nargs="?", help="complex (ccz/cz) or code (t)")
    g.add_argument("circuit", nargs="?")
    g.add_argument("code", nargs="?")
    g.add_argument("--membrane", help="2-cycle JSON for gate cz")
    g.add_argument("--copies", default="1,2")
    g.add_argument("--plus", default="all", help="logical qubits initialised |+>: 'all' or csv")
    g.add_argument("--fixed", default="", help="binary string of fixed logical values")
    common(g)
    g.set_defaults(func=_gate_dispatch)

    m = sub.add_parser("mcg")
    m.add_argument("action", choices=("twist", "torus-homology", "thurston", "thickened"))
    m.add_argument("--genus", type=int, default=2)
    m.add_argument("--curve", help="a:i | b:i | f:i | comma vector")
    m.add_argument("--matrix", help="matrix JSON for torus-homology")
    m.add_argument("--coeff", default="z", help="z | z2")
    m.add_argument("--n", help="intersection matrix JSON for thurston")
    m.add_argument("--word", default="A B", help="word over A B A- B-")
    m.add_argument("--sequence", help="thickened twist sequence, e.g. 'b:2 b:1 f:1'")
    common(m)
    m.set_defaults(func=cmd_mcg)

    hg = sub.add_parser("hypergraph")
    hg.add_argument("action", choices=("build", "degrees"))
    hg.add_argument("file")
    hg.add_argument("--lift", action="store_true")
    hg.add_argument("--export", choices=("json", "dot"), default="json")
    common(hg)
    hg.set_defaults(func=cmd_hypergraph)

    sv = sub.add_parser("sullivan")
    sv.add_argument("action", choices=("synth", "roundtrip"))
    sv.add_argument("file", help="form JSON")
    common(sv)
    sv.set_defaults(func=cmd_sullivan)

    r = sub.add_parser("report")
    r.add_argument("file")
    r.add_argument("--budget", type=int, default=1 << 22)
    common(r)
    r.set_defaults(func=cmd_report)

    mf = sub.add_parser("run-manifest")
    mf.add_argument("file")
    common(mf)
    mf.set_defaults(func=cmd_manifest)
    return p


def _gate_dispatch(args) -> int:
    # `gate check/action/simulate CIRCUIT CODE` reuse the positional slots
    if args.action in ("check", "action", "simulate"):
        if args.code is None:
            args.circuit, args.code = args.file, args.circuit
        if args.circuit is None or args.code is None:
            raise SystemExit(f"gate {args.action} needs CIRCUIT and CODE files")
    return cmd_gate(args)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
