#!/usr/bin/env python3
"""Writes catalog/pairs/*.json, catalog/tables/*.json and catalog/manifest.json.

The involution matrices, sign data and embedding supports below are the
hand-derived inputs; the loader re-validates every file.
"""
import json
import pathlib
from fractions import Fraction as F

ROOT = pathlib.Path(__file__).resolve().parent.parent / "catalog"


def q(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(v):
    return [q(x) for x in v]


def mat(rows):
    return [vec(r) for r in rows]


def weights(entries):
    return [{"weight": vec(w), "multiplicity": m} for w, m in entries]


def neg(v):
    return [-x for x in v]


# sigma on su(4)-type coordinates (a1, a2, b1, b2)
SWAP_NEG = [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]
PAIR_NEG = [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]
HALF_U = [F(1, 2), F(-1, 2), F(1, 2), F(-1, 2)]

pairs = {}

pairs["su2_2__sp2R"] = {
    "id": "(su(2,2),sp(2,R))", "kind": "involution", "label": "sp(2,R) in su(2,2)",
    "base": "su(2,2)", "subgroup": "sp(2,R)", "matrix": mat(SWAP_NEG),
    "default_epsilon": {"k": 1, "p": 1},
    "epsilon": [{"part": "p", "weight": vec(w), "sign": 1}
                for w in ([1, 0, -1, 0], [-1, 0, 1, 0], [0, 1, 0, -1], [0, -1, 0, 1])],
    "zero_weight_fixed_dim": 0, "declared_dim_gprime": 10,
    "expected_restricted_roots": weights([(HALF_U, 2), (neg(HALF_U), 2)]),
}

pairs["su2_2__sp1_1"] = {
    "id": "(su(2,2),sp(1,1))", "kind": "involution", "label": "sp(1,1) in su(2,2)",
    "base": "su(2,2)", "subgroup": "sp(1,1)", "matrix": mat(PAIR_NEG),
    "default_epsilon": {"k": 1, "p": 1},
    "epsilon": [{"part": "k", "weight": vec(w), "sign": 1}
                for w in ([1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1])],
    "zero_weight_fixed_dim": 0, "declared_dim_gprime": 10,
    "expected_restricted_roots": [],
}

pairs["so2_2__so2_1"] = {
    "id": "(so(2,2),so(2,1))", "kind": "involution", "label": "so(2,1) in so(2,2)",
    "base": "so(2,2)", "subgroup": "so(2,1)", "matrix": mat([[1, 0], [0, -1]]),
    "default_epsilon": {"k": 1, "p": 1}, "epsilon": [],
    "zero_weight_fixed_dim": 0, "declared_dim_gprime": 3,
    "expected_restricted_roots": [],
}

pairs["so4__so3"] = {
    "id": "(so(4),so(3))", "kind": "involution", "label": "so(3) in so(4)",
    "base": "so(4)", "subgroup": "so(3)", "matrix": mat([[-1, 0], [0, 1]]),
    "default_epsilon": {"k": 1, "p": 1}, "epsilon": [],
    "zero_weight_fixed_dim": 0, "declared_dim_gprime": 3,
    "expected_restricted_roots": weights([([1, 0], 2), ([-1, 0], 2)]),
}

pairs["su4__sp2"] = {
    "id": "(su(4),sp(2))", "kind": "involution", "label": "sp(2) in su(4)",
    "base": "su(4)", "subgroup": "sp(2)", "matrix": mat(SWAP_NEG),
    "default_epsilon": {"k": 1, "p": 1},
    "epsilon": [{"part": "k", "weight": vec(w), "sign": 1}
                for w in ([1, 0, -1, 0], [-1, 0, 1, 0], [0, 1, 0, -1], [0, -1, 0, 1])],
    "zero_weight_fixed_dim": 0, "declared_dim_gprime": 10,
    "expected_restricted_roots": weights([(HALF_U, 4), (neg(HALF_U), 4)]),
}

so5_roots = [[1, 1], [1, -1], [-1, 1], [-1, -1], [1, 0], [-1, 0], [0, 1], [0, -1]]
pairs["so5C__so3_2"] = {
    "id": "(so(5,C),so(3,2))", "kind": "involution", "label": "so(3,2) in so(5,C)",
    "base": "so(5,C)", "subgroup": "so(3,2)", "matrix": mat([[-1, 0], [0, -1]]),
    "default_epsilon": {"k": 1, "p": 1}, "epsilon": [],
    "zero_weight_fixed_dim": 2, "declared_dim_gprime": 10,
    "expected_restricted_roots": weights([(w, 1) for w in so5_roots]),
}

pairs["sl4C__sp2C"] = {
    "id": "(sl(4,C),sp(2,C))", "kind": "involution", "label": "sp(2,C) in sl(4,C)",
    "base": "sl(4,C)", "subgroup": "sp(2,C)", "matrix": mat(SWAP_NEG),
    "default_epsilon": {"k": 1, "p": 1},
    "epsilon": [{"part": part, "weight": vec(w), "sign": 1}
                for part in ("k", "p")
                for w in ([1, 0, -1, 0], [-1, 0, 1, 0], [0, 1, 0, -1], [0, -1, 0, 1])],
    "zero_weight_fixed_dim": 2, "declared_dim_gprime": 20,
    "expected_restricted_roots": weights([(HALF_U, 4), (neg(HALF_U), 4)]),
}

pairs["so4C__so3C"] = {
    "id": "(so(4,C),so(3,C))", "kind": "involution", "label": "so(3,C) in so(4,C)",
    "base": "so(4,C)", "subgroup": "so(3,C)", "matrix": mat([[-1, 0], [0, 1]]),
    "default_epsilon": {"k": 1, "p": 1}, "epsilon": [],
    "zero_weight_fixed_dim": 1, "declared_dim_gprime": 6,
    "expected_restricted_roots": weights([([1, 0], 2), ([-1, 0], 2)]),
}


def g2_vectors(part_of, parts=("",)):
    """G2 root vectors inside so(7): long roots e_i - e_j have one so(7) weight;
    the short root e_k - (1,1,1)/3 is carried by e_k and -(e_i + e_j)."""
    e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    out = []
    for layer in parts:
        for i in range(3):
            for j in range(3):
                if i != j:
                    w = [a - b for a, b in zip(e[i], e[j])]
                    out.append([(part_of(w, layer), w)])
        for k in range(3):
            i, j = [x for x in range(3) if x != k]
            for s in (1, -1):
                a = [s * x for x in e[k]]
                b = [-s * (x + y) for x, y in zip(e[i], e[j])]
                out.append([(part_of(a, layer), a), (part_of(b, layer), b)])
    return [{"support": [{"part": p, "weight": vec(w)} for p, w in sup], "multiplicity": 1} for sup in out]


def so43_part(w, _layer):
    # k = so(4) + so(3): weights +-e1 +- e2 and +-e3; everything else is in p.
    nz = [i for i, x in enumerate(w) if x != 0]
    return "k" if nz in ([0, 1], [2]) else "p"


G2_CARTAN = [vec([1, -1, 0]), vec([0, 1, -1])]

pairs["so4_3__g2R"] = {
    "id": "(so(4,3),g2(R))", "kind": "embedding", "label": "g2(R) in so(4,3)",
    "base": "so(4,3)", "subgroup": "g2(R)", "cartan_basis": G2_CARTAN, "zero_dim": 0,
    "declared_dim_gprime": 14, "vectors": g2_vectors(so43_part),
}
pairs["so7__g2"] = {
    "id": "(so(7),g2)", "kind": "embedding", "label": "g2 in so(7)",
    "base": "so(7)", "subgroup": "g2", "cartan_basis": G2_CARTAN, "zero_dim": 0,
    "declared_dim_gprime": 14, "vectors": g2_vectors(lambda w, _l: "k"),
}
pairs["so7C__g2C"] = {
    "id": "(so(7,C),g2(C))", "kind": "embedding", "label": "g2(C) in so(7,C)",
    "base": "so(7,C)", "subgroup": "g2(C)", "cartan_basis": G2_CARTAN, "zero_dim": 2,
    "declared_dim_gprime": 28, "vectors": g2_vectors(lambda w, layer: layer, parts=("k", "p")),
}

table = {
    "schema": "branchdec/table/1",
    "description": "Triples (G, G', L) whose restriction of A_q(lambda) to G' is almost irreducible, at small rank.",
    "rows": [
        {"G": "SU(2,2)", "Gprime": "Sp(2,R)", "L": "U(1,2)", "pair": "(su(2,2),sp(2,R))", "X": vec([3, -1, -1, -1])},
        {"G": "SU(2,2)", "Gprime": "Sp(1,1)", "L": "U(1,2)", "pair": "(su(2,2),sp(1,1))", "X": vec([3, -1, -1, -1])},
        {"G": "SO0(2,2)", "Gprime": "SO0(2,1)", "L": "U(1,1)", "pair": "(so(2,2),so(2,1))", "X": vec([1, 1])},
        {"G": "SO0(4,3)", "Gprime": "G2(R)", "L": "SO0(4,1)xSO(2)", "pair": "(so(4,3),g2(R))", "X": vec([0, 0, 1])},
        {"G": "SO0(4,3)", "Gprime": "G2(R)", "L": "SO(2)xSO0(2,3)", "pair": "(so(4,3),g2(R))", "X": vec([1, 0, 0])},
        {"G": "SL(4,C)", "Gprime": "Sp(2,C)", "L": "GL(3,C)", "pair": "(sl(4,C),sp(2,C))", "X": vec([3, -1, -1, -1])},
        {"G": "SO(4,C)", "Gprime": "SO(3,C)", "L": "GL(2,C)", "pair": "(so(4,C),so(3,C))", "X": vec([1, 1])},
        {"G": "SO(7,C)", "Gprime": "G2(C)", "L": "C^x x SO(5,C)", "pair": "(so(7,C),g2(C))", "X": vec([1, 0, 0])},
        {"G": "SU(4)", "Gprime": "Sp(2)", "L": "U(3)", "pair": "(su(4),sp(2))", "X": vec([3, -1, -1, -1])},
        {"G": "SO(4)", "Gprime": "SO(3)", "L": "U(2)", "pair": "(so(4),so(3))", "X": vec([1, 1])},
        {"G": "SO(7)", "Gprime": "G2", "L": "SO(2)xSO(5)", "pair": "(so(7),g2)", "X": vec([1, 0, 0])},
    ],
    "exhaustiveness": [
        {"pair": "(su(2,2),sp(2,R))", "allowed_levi_types": [[[1, 0], [1, 2]], [[0, 1], [2, 1]]]},
    ],
}


def main():
    (ROOT / "pairs").mkdir(parents=True, exist_ok=True)
    (ROOT / "tables").mkdir(parents=True, exist_ok=True)
    pair_files = []
    for slug, body in sorted(pairs.items()):
        body = {"schema": "branchdec/pair/1", **body}
        path = ROOT / "pairs" / f"{slug}.json"
        path.write_text(json.dumps(body, indent=2) + "\n")
        pair_files.append(f"pairs/{slug}.json")
    (ROOT / "tables" / "irreducible_restrictions.json").write_text(json.dumps(table, indent=2) + "\n")
    algebras = sorted(f"algebras/{p.name}" for p in (ROOT / "algebras").glob("*.json"))
    manifest = {
        "schema": "branchdec/manifest/1",
        "version": "1.0.0",
        "algebras": algebras,
        "pairs": pair_files,
        "tables": ["tables/irreducible_restrictions.json"],
    }
    (ROOT / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
