"""Regenerate the committed corpus: instance files, mutants, goldens.

Run as `python -m coringlab.gen_corpus`.  Output is deterministic, so
regenerating over an unchanged tree is a no-op; goldens are the exact
text reports of the standing instance/command matrix.
"""

from __future__ import annotations

import json
import os

from . import cli
from .exactla import Mat
from .instances import build_i2


def _f4_spec():
    return {
        "dim": 2,
        "labels": ["1", "w"],
        "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]],
        "unit": [1, 0],
    }


def _ground_spec(label="1"):
    return {"dim": 1, "labels": [label], "mul": [[[1]]], "unit": [1]}


def instance_payloads():
    i1 = {
        "id": "i1_trivial",
        "field": {"kind": "prime", "p": 2},
        "algebras": {"K": _ground_spec()},
        "ring_homs": {"id": {"source": "K", "target": "K", "matrix": [[1]]}},
        "coring": {"kind": "trivial", "algebra": "K"},
        "sigma": {"kind": "from_grouplike", "left": "K"},
        "a": "K",
        "b": "K",
        "iota": "id",
    }
    i2 = {
        "id": "i2_f4_over_f2",
        "field": {"kind": "prime", "p": 2},
        "algebras": {"A": _f4_spec(), "B": _ground_spec()},
        "ring_homs": {"iota": {"source": "B", "target": "A", "matrix": [[1], [0]]}},
        "coring": {"kind": "sweedler", "iota": "iota"},
        "sigma": {"kind": "from_grouplike", "left": "B"},
        "a": "A",
        "b": "B",
        "iota": "iota",
    }
    ident = [[[["1"]]]]
    i3 = {
        "id": "i3_comatrix_k2",
        "field": {"kind": "rationals"},
        "algebras": {"K": {"dim": 1, "labels": ["1"], "mul": [[["1"]]], "unit": ["1"]}},
        "bimodules": {
            "Sigma": {
                "left": "K",
                "right": "K",
                "dim": 2,
                "left_act": [[["1", "0"], ["0", "1"]]],
                "right_act": [[["1", "0"]], [["0", "1"]]],
            }
        },
        "coring": {"kind": "comatrix", "base": "K", "sigma": "Sigma"},
        "sigma": {"kind": "comatrix", "carrier": "Sigma"},
        "a": "K",
        "b": "K",
    }
    i4 = {
        "id": "i4_row_ring",
        "field": {"kind": "prime", "p": 2},
        "algebras": {
            "R4": {
                "dim": 2,
                "labels": ["e", "f"],
                "mul": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]],
                "unit": None,
            }
        },
        "a": "R4",
    }
    i5 = {
        "id": "i5_trivial_f4",
        "field": {"kind": "prime", "p": 2},
        "algebras": {"A": _f4_spec(), "B": _ground_spec()},
        "ring_homs": {"iota": {"source": "B", "target": "A", "matrix": [[1], [0]]}},
        "coring": {"kind": "trivial", "algebra": "A"},
        "sigma": {"kind": "from_grouplike", "left": "B"},
        "a": "A",
        "b": "B",
        "iota": "iota",
    }
    return [i1, i2, i3, i4, i5]


def _explicit_i2_coring_payload():
    """The canonical coring of i2 spelled out as explicit matrices."""
    parts = build_i2()
    c = parts.coring
    f = parts.field
    carrier = c.carrier
    spec = {
        "id": "i2_explicit",
        "field": {"kind": "prime", "p": 2},
        "algebras": {"A": _f4_spec(), "B": _ground_spec()},
        "ring_homs": {"iota": {"source": "B", "target": "A", "matrix": [[1], [0]]}},
        "bimodules": {
            "C": {
                "left": "A",
                "right": "A",
                "dim": carrier.dim,
                "left_act": cli._show_tensor3(f, carrier.left_act),
                "right_act": cli._show_tensor3(f, carrier.right_act),
            },
            "SigmaCar": {
                "left": "B",
                "right": "A",
                "dim": 2,
                "left_act": cli._show_tensor3(f, parts.sigma.carrier.left_act),
                "right_act": cli._show_tensor3(f, parts.sigma.carrier.right_act),
            },
        },
        "coring": {
            "kind": "explicit",
            "base": "A",
            "carrier": "C",
            "delta": cli._show_matrix(f, c.delta),
            "eps": cli._show_matrix(f, c.eps),
            "grouplike": [int(v) for v in parts.grouplike.g.data],
        },
        "sigma": {
            "kind": "explicit",
            "carrier": "SigmaCar",
            "rho": cli._show_matrix(f, parts.sigma.rho),
        },
        "a": "A",
        "b": "B",
        "iota": "iota",
    }
    return spec


def mutant_payloads():
    """At least ten corrupted instances, each violating one identity."""
    base = _explicit_i2_coring_payload()
    out = []

    def fresh(tag):
        m = json.loads(json.dumps(base))
        m["id"] = tag
        return m

    m = fresh("m01_nonassociative_algebra")
    m["algebras"]["A"]["mul"][0][1] = [1, 1]  # 1 * w := 1 + w
    out.append(m)

    m = fresh("m02_bad_unit")
    m["algebras"]["A"]["unit"] = [0, 1]
    out.append(m)

    m = fresh("m03_delta_columns_swapped")
    d = m["coring"]["delta"]
    for row in d:
        row[0], row[1] = row[1], row[0]
    out.append(m)

    m = fresh("m04_eps_zero")
    m["coring"]["eps"] = [[0, 0, 0, 0], [0, 0, 0, 0]]
    out.append(m)

    m = fresh("m05_rho_corrupt")
    m["sigma"]["rho"][0][0] = 1 - m["sigma"]["rho"][0][0]
    out.append(m)

    m = fresh("m06_right_action_not_associative")
    m["bimodules"]["SigmaCar"]["right_act"][0][1] = [1, 0]  # basis1 . w := 1
    out.append(m)

    m = fresh("m07_actions_do_not_commute")
    m["bimodules"]["C"]["left_act"][1][0] = [0, 1, 0, 0]
    out.append(m)

    m = fresh("m08_hom_not_multiplicative")
    m["ring_homs"]["iota"]["matrix"] = [[0], [1]]  # 1 |-> w
    out.append(m)

    m = fresh("m09_grouplike_wrong_counit")
    m["coring"]["grouplike"] = [0, 1, 0, 0]  # counit w != 1
    out.append(m)

    m = fresh("m10_nonprime_modulus")
    m["field"] = {"kind": "prime", "p": 4}
    out.append(m)

    m = fresh("m11_rho_not_right_linear")
    m["sigma"]["rho"] = [[1, 0], [0, 0], [0, 0], [0, 1]]
    out.append(m)

    # a bimodule-linear but coassociativity-breaking comultiplication:
    # twist delta by the carrier endomorphism a (x) a' |-> a w (x) a'
    m = fresh("m12_delta_coassociativity")
    parts = build_i2()
    f = parts.field
    a = parts.a
    from .exactla import kron

    cols = []
    for i in range(2):
        for j in range(2):
            ei = Mat.unit_column(f, 2, i)
            val = kron(a.mul_vec(ei, Mat.column(f, [0, 1])), Mat.unit_column(f, 2, j))
            cols.append(list(val.data))
    p = Mat.from_cols(f, cols)
    delta = cli._parse_matrix(f, m["coring"]["delta"], "delta") @ p
    m["coring"]["delta"] = cli._show_matrix(f, delta)
    del m["coring"]["grouplike"]
    out.append(m)

    return out


GOLDEN_MATRIX = {
    "i1_trivial": ["axioms", "firm", "galois", "theorem:ge", "correspondences"],
    "i2_f4_over_f2": [
        "axioms", "firm", "galois", "theorem:debil", "theorem:fuerte",
        "theorem:ff", "theorem:ge", "theorem:clasico", "diagrams",
        "correspondences", "equivalence",
    ],
    "i3_comatrix_k2": ["axioms", "galois", "theorem:ge", "theorem:clasico"],
    "i4_row_ring": ["axioms", "firm"],
    "i5_trivial_f4": ["axioms", "galois", "theorem:ff", "theorem:ge", "correspondences"],
}


def write_corpus(root=None):
    if root is None:
        root = os.path.join(os.path.dirname(__file__), "corpus")
    os.makedirs(os.path.join(root, "mutants"), exist_ok=True)
    os.makedirs(os.path.join(root, "golden"), exist_ok=True)
    for payload in instance_payloads():
        path = os.path.join(root, payload["id"] + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    for payload in mutant_payloads():
        path = os.path.join(root, "mutants", payload["id"] + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    for ident, commands in GOLDEN_MATRIX.items():
        inst_file = cli.load(os.path.join(root, ident + ".json"))
        for command in commands:
            rep = cli.run(command, inst_file)
            text = cli.render_text(inst_file.label, command, rep)
            name = f"{ident}__{command.replace(':', '_')}.txt"
            with open(os.path.join(root, "golden", name), "w", encoding="utf-8") as fh:
                fh.write(text)
    return root


if __name__ == "__main__":
    print("corpus written to", write_corpus())
