#!/usr/bin/env python3
"""Smoke test for the aalpha_py extension module.

Build the extension first:

    cargo build -p aalpha-python --release

then run this script from the repository root:

    python3 python/smoke_test.py

The script locates the built cdylib under target/, copies it next to a
temporary directory under the importable name, and exercises the main
entry points.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_library() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = []
    for profile in ("release", "debug"):
        for suffix in (".so", ".dylib"):
            candidates.append(root / "target" / profile / f"libaalpha_py{suffix}")
        candidates.append(root / "target" / profile / "aalpha_py.dll")
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "could not find the built extension; run `cargo build -p aalpha-python --release` first"
    )


def main() -> None:
    lib = locate_library()
    tmp = Path(tempfile.mkdtemp(prefix="aalpha-smoke-"))
    target = tmp / ("aalpha_py" + (".pyd" if lib.suffix == ".dll" else ".so"))
    shutil.copyfile(lib, target)
    sys.path.insert(0, str(tmp))

    import aalpha_py as aa

    # graph construction and invariants
    k4 = aa.Graph.family("complete:4")
    assert k4.n == 4 and k4.m == 6 and k4.regularity() == 3
    p2 = aa.Graph.family("path:2")
    assert p2.degrees() == [1, 1]

    round_trip = aa.Graph.from_edge_list(k4.to_edge_list())
    assert round_trip == k4

    # spectrum of the half-alpha matrix of K4: {3, [1]^3}
    spec = aa.alpha_spectrum(k4, 0.5)
    assert spec == [(3.0, 1), (1.0, 3)], spec

    # the join graph has the expected block sizes: subdividing K4 gives
    # 2*6 + 12 edges, plus the P2 edge, plus the 4*2 connecting edges
    joined = aa.join("qvertex", k4, p2)
    assert joined.n == 12 and joined.m == 24 + 1 + 8

    # both spectrum routes agree on the worked example
    direct = aa.join_spectrum_direct("qvertex", k4, p2, 0.5)
    closed = aa.join_spectrum_closed("qvertex", k4, p2, 0.5)
    flat_direct = [v for v, m in direct for _ in range(m)]
    flat_closed = [v for v, m, _ in closed for _ in range(m)]
    assert len(flat_direct) == len(flat_closed) == 12
    assert all(math.isclose(a, b, abs_tol=1e-8) for a, b in zip(flat_direct, flat_closed))
    printed = [5.632, 3.790, 3.5, 3.5, 3.5, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 1.077]
    assert all(abs(a - b) < 1e-3 for a, b in zip(flat_direct, printed))
    assert any(clause.startswith("Cor1.1") for _, _, clause in closed)

    # factored characteristic polynomial at a point, arbitrary second factor
    p3 = aa.Graph.family("path:3")
    value = aa.theorem_charpoly_eval("qedge", k4, p3, 0.25, 9.0)
    assert math.isfinite(value) and value != 0.0

    # coronal closed form matches the linear-solve route on K_{2,3}
    k23 = aa.Graph.family("cbipartite:2,3")
    assert math.isclose(aa.coronal(k23, 0.0, 3.0), aa.coronal_kab(2, 3, 0.0, 3.0), rel_tol=1e-9)

    # exact rational identity of the factored and assembled charpolys
    c3 = aa.Graph.family("cycle:3")
    k3 = aa.Graph.family("complete:3")
    assert aa.exact_theorem_identity("qvertex", k3, c3, 1, 3)

    # cospectral seed pair certifies, and the family construction works
    shrikhande = aa.Graph.family("shrikhande")
    rook = aa.Graph.family("rook4")
    cert = aa.verify_cospectral(shrikhande, rook, [0.0, 0.5, 1.0])
    assert cert["is_cospectral"] and cert["max_deviation"] <= 1e-7
    assert cert["nonisomorphic_evidence"] == "adjacency-spectrum-same-but-canonical-forms-differ"

    family = aa.generate_family("shrikhande-rook", aa.Graph.family("empty:1"), ["qvertex"])
    assert len(family) == 1 and family[0]["is_cospectral"] and family[0]["join_n"] == 65

    # error surfaces map to Python exceptions
    try:
        aa.alpha_spectrum(k4, 1.5)
    except ValueError:
        pass
    else:
        raise AssertionError("alpha out of range must raise")

    print("aalpha_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
