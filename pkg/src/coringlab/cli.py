"""Instance files, command dispatch and reproducible reports.

Instance files are JSON with basis-labelled structure-constant tables;
matrices are row-major with scalars written as integers (prime fields)
or strings like "2/3" (rationals).  Loading validates every declared
object and fails with a located error naming the violated identity.

Exit codes: 0 every asserted equivalence holds, 1 an assertion failed,
2 the input could not be loaded or the command is unknown.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import __version__
from .bimod import Bimodule, check_bimodule, ground_alg, is_firm_module
from .comod import Comodule, check_comodule, comodule_from_grouplike, with_left_action
from .corings import (
    Coring,
    Grouplike,
    check_coring,
    comatrix_coring,
    is_grouplike,
    sweedler_coring,
    trivial_coring,
)
from .errors import (
    LabError,
    NotFirm,
    ParseError,
    UnknownCommand,
    ValidationError,
)
from .exactla import GF, QQ, Mat, inverse
from .galois import (
    GaloisInstance,
    TheoremReport,
    can_dagger,
    galois_witness,
    is_galois,
    lemma_sobreideal,
    verify_cor_clasico,
    verify_diagrams,
    verify_thm_GE,
    verify_thm_debil,
    verify_thm_fielmenteplano,
    verify_thm_fuerte,
)
from .instances import InstanceParts, comatrix_coaction
from .rings import Algebra, RingHom, check_algebra, check_ring_hom, is_firm_ring


COMMANDS = (
    "axioms",
    "firm",
    "galois",
    "theorem:debil",
    "theorem:fuerte",
    "theorem:ff",
    "theorem:ge",
    "theorem:clasico",
    "diagrams",
    "correspondences",
    "equivalence",
)


# ---------------------------------------------------------------------------
# scalars and matrices


def _parse_field(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("field", "expected an object with a 'kind'")
    if obj["kind"] == "prime":
        try:
            return GF(int(obj["p"]))
        except (KeyError, ValueError) as e:
            raise ParseError("field", str(e))
    if obj["kind"] == "rationals":
        return QQ()
    raise ParseError("field", f"unknown field kind {obj['kind']!r}")


def _show_field(field):
    if field.p:
        return {"kind": "prime", "p": field.p}
    return {"kind": "rationals"}


def _parse_scalar(field, v):
    try:
        return field.parse(v)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError("scalar", str(e))


def _show_scalar(field, v):
    if field.p:
        return int(v)
    return str(v)


def _parse_matrix(field, rows, what="matrix"):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(what, "expected a list of rows")
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    flat = []
    for r in rows:
        if len(r) != ncols:
            raise ParseError(what, "ragged rows")
        flat.extend(_parse_scalar(field, v) for v in r)
    return Mat(field, nrows, ncols, flat)


def _show_matrix(field, m):
    return [[_show_scalar(field, m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def _parse_tensor3(field, t, what="tensor"):
    out = []
    for plane in t:
        out.append([[_parse_scalar(field, v) for v in row] for row in plane])
    return out


def _show_tensor3(field, t):
    return [[[_show_scalar(field, v) for v in row] for row in plane] for plane in t]


# ---------------------------------------------------------------------------
# instance files


class InstanceFile:
    """Validated object graph of one instance."""

    def __init__(self, data, parts, algebras, ring_homs, bimodules, has_galois):
        self.data = data
        self.parts = parts
        self.algebras = algebras
        self.ring_homs = ring_homs
        self.bimodules = bimodules
        self.has_galois = has_galois
        self._instance = None

    @property
    def label(self):
        return self.parts.label

    def galois_instance(self):
        if not self.has_galois:
            raise ValidationError(self.label, "instance has no descent data")
        if self._instance is None:
            self._instance = GaloisInstance(self.parts)
        return self._instance


def load(path):
    """Parse and fully validate an instance file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError(str(path), str(e))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}:{e.lineno}", e.msg)
    return load_data(data)


def load_data(data):
    field = _parse_field(data.get("field"))
    label = data.get("id", "unnamed")

    algebras = {}
    for name in sorted(data.get("algebras", {})):
        spec = data["algebras"][name]
        mul = _parse_tensor3(field, spec["mul"], f"algebra {name}")
        unit = None
        if spec.get("unit") is not None:
            unit = [_parse_scalar(field, v) for v in spec["unit"]]
        alg = Algebra(field, int(spec["dim"]), mul, unit=unit, labels=spec.get("labels"))
        bad = check_algebra(alg)
        if bad:
            raise ValidationError(f"algebra {name}", bad[0])
        algebras[name] = alg

    def get_algebra(name, what):
        if name == "ground":
            return ground_alg(field)
        if name not in algebras:
            raise ParseError(what, f"unknown algebra {name!r}")
        return algebras[name]

    ring_homs = {}
    for name in sorted(data.get("ring_homs", {})):
        spec = data["ring_homs"][name]
        src = get_algebra(spec["source"], f"ring hom {name}")
        dst = get_algebra(spec["target"], f"ring hom {name}")
        hom = RingHom(src, dst, _parse_matrix(field, spec["matrix"], f"ring hom {name}"))
        bad = check_ring_hom(hom)
        if bad:
            raise ValidationError(f"ring hom {name}", bad[0])
        ring_homs[name] = hom

    bimodules = {}
    for name in sorted(data.get("bimodules", {})):
        spec = data["bimodules"][name]
        left = get_algebra(spec["left"], f"bimodule {name}")
        right = get_algebra(spec["right"], f"bimodule {name}")
        m = Bimodule(
            left, right, int(spec["dim"]),
            _parse_tensor3(field, spec["left_act"], f"bimodule {name}"),
            _parse_tensor3(field, spec["right_act"], f"bimodule {name}"),
        )
        bad = check_bimodule(m)
        if bad:
            raise ValidationError(f"bimodule {name}", bad[0])
        bimodules[name] = m

    coring = None
    grouplike = None
    dual_basis = None
    cspec = data.get("coring")
    if cspec:
        kind = cspec.get("kind")
        if kind == "trivial":
            coring = trivial_coring(get_algebra(cspec["algebra"], "coring"))
            if coring.base.is_unital:
                grouplike = Grouplike(coring, coring.base.unit)
        elif kind == "sweedler":
            iota = ring_homs.get(cspec.get("iota"))
            if iota is None:
                raise ParseError("coring", f"unknown ring hom {cspec.get('iota')!r}")
            coring, grouplike = sweedler_coring(iota)
        elif kind == "comatrix":
            base = get_algebra(cspec["base"], "coring")
            sig = bimodules.get(cspec.get("sigma"))
            if sig is None:
                raise ParseError("coring", f"unknown bimodule {cspec.get('sigma')!r}")
            from .bimod import is_fg_projective

            dual_basis = is_fg_projective(sig)
            if dual_basis is None:
                raise ValidationError("coring", "module is not finitely generated projective")
            coring = comatrix_coring(base, sig, dual_basis)
        elif kind == "explicit":
            carrier = bimodules.get(cspec.get("carrier"))
            if carrier is None:
                raise ParseError("coring", f"unknown bimodule {cspec.get('carrier')!r}")
            delta = _parse_matrix(field, cspec["delta"], "coring delta")
            eps = _parse_matrix(field, cspec["eps"], "coring eps")
            base = get_algebra(cspec["base"], "coring")
            coring = Coring(base, carrier, delta, eps)
        else:
            raise ParseError("coring", f"unknown coring kind {kind!r}")
        bad = check_coring(coring)
        if bad:
            raise ValidationError("coring", bad[0])
        if "grouplike" in cspec:
            g = Mat.column(field, [_parse_scalar(field, v) for v in cspec["grouplike"]])
            grouplike = Grouplike(coring, g)
        if grouplike is not None and not is_grouplike(coring, grouplike.g):
            raise ValidationError("grouplike", "declared element is not group-like")

    sigma = None
    sspec = data.get("sigma")
    if sspec:
        kind = sspec.get("kind")
        if coring is None:
            raise ParseError("sigma", "a comodule needs a coring")
        if kind == "from_grouplike":
            if grouplike is None:
                raise ParseError("sigma", "no group-like available")
            left = get_algebra(sspec["left"], "sigma")
            base0 = comodule_from_grouplike(grouplike)
            iota_name = sspec.get("left_action_via")
            if iota_name:
                iota = ring_homs[iota_name]
                mats = [coring.base.left_mult(iota.matrix.col(i)) for i in range(left.dim)]
            else:
                mats = [Mat.identity(field, coring.base.dim) for _ in range(left.dim)]
            sigma = with_left_action(base0, left, mats)
        elif kind == "comatrix":
            sig = bimodules.get(sspec.get("carrier"))
            if sig is None or dual_basis is None:
                raise ParseError("sigma", "comatrix coaction needs the comatrix coring data")
            rho = comatrix_coaction(sig, coring, dual_basis)
            sigma = Comodule(coring, sig, rho)
        elif kind == "explicit":
            carrier = bimodules.get(sspec.get("carrier"))
            if carrier is None:
                raise ParseError("sigma", f"unknown bimodule {sspec.get('carrier')!r}")
            rho = _parse_matrix(field, sspec["rho"], "sigma rho")
            sigma = Comodule(coring, carrier, rho)
        else:
            raise ParseError("sigma", f"unknown sigma kind {kind!r}")
        bad = check_comodule(sigma)
        if bad:
            raise ValidationError("sigma", bad[0])

    parts = InstanceParts(label, field,
                          a=get_algebra(data["a"], "instance") if "a" in data else None,
                          b=get_algebra(data["b"], "instance") if "b" in data else None,
                          iota=ring_homs.get(data.get("iota")),
                          coring=coring, grouplike=grouplike, sigma=sigma,
                          extras={"dual_basis": dual_basis} if dual_basis else None)
    has_galois = sigma is not None and parts.a is not None and parts.b is not None
    return InstanceFile(data, parts, algebras, ring_homs, bimodules, has_galois)


def serialize(instance_file):
    """Canonical JSON text; reparsing yields an equal object graph."""
    data = instance_file.data
    field = instance_file.parts.field
    out = {"id": instance_file.label, "field": _show_field(field)}
    if instance_file.algebras:
        out["algebras"] = {}
        for name in sorted(instance_file.algebras):
            a = instance_file.algebras[name]
            out["algebras"][name] = {
                "dim": a.dim,
                "labels": list(a.labels),
                "mul": _show_tensor3(field, a.mul),
                "unit": None if a.unit is None else [_show_scalar(field, v) for v in a.unit.data],
            }
    if instance_file.ring_homs:
        out["ring_homs"] = {}
        for name in sorted(instance_file.ring_homs):
            h = instance_file.ring_homs[name]
            src = _algebra_name(instance_file, h.source)
            dst = _algebra_name(instance_file, h.target)
            out["ring_homs"][name] = {"source": src, "target": dst,
                                      "matrix": _show_matrix(field, h.matrix)}
    if instance_file.bimodules:
        out["bimodules"] = {}
        for name in sorted(instance_file.bimodules):
            m = instance_file.bimodules[name]
            out["bimodules"][name] = {
                "left": _algebra_name(instance_file, m.left_alg),
                "right": _algebra_name(instance_file, m.right_alg),
                "dim": m.dim,
                "left_act": _show_tensor3(field, m.left_act),
                "right_act": _show_tensor3(field, m.right_act),
            }
    for key in ("coring", "sigma", "a", "b", "iota"):
        if key in data:
            out[key] = data[key]
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def _algebra_name(instance_file, alg):
    for name, a in instance_file.algebras.items():
        if a is alg or a == alg:
            return name
    return "ground"


# ---------------------------------------------------------------------------
# corpus


def corpus_dir():
    return resources.files("coringlab") / "corpus"


def corpus_list():
    """The standing instances plus the seeded generator families."""
    entries = [
        ("i1_trivial", "one-dimensional positive instance"),
        ("i2_f4_over_f2", "canonical coring of a quadratic field extension"),
        ("i3_comatrix_k2", "matrix coalgebra on a plane over the rationals"),
        ("i4_row_ring", "non-unital firm row ring (firmness corpus)"),
        ("i5_trivial_f4", "trivial coring with small base ring; non-Galois"),
    ]
    generators = [
        ("random-corings", "seeded draws from all corings of dim <= 2 over GF(2)"),
        ("random-tensor-pairs", "seeded bimodule pairs over GF(2)/GF(3)/Q"),
    ]
    return entries, generators


def corpus_path(ident):
    return corpus_dir() / f"{ident}.json"


# ---------------------------------------------------------------------------
# commands


def _report_axioms(inst_file):
    rep = TheoremReport("structure axioms")
    for name in sorted(inst_file.algebras):
        rep.add(f"algebra {name} axioms", check_algebra(inst_file.algebras[name]) == [])
    for name in sorted(inst_file.ring_homs):
        rep.add(f"ring hom {name} multiplicative", check_ring_hom(inst_file.ring_homs[name]) == [])
    for name in sorted(inst_file.bimodules):
        rep.add(f"bimodule {name} axioms", check_bimodule(inst_file.bimodules[name]) == [])
    parts = inst_file.parts
    if parts.coring is not None:
        rep.add("coring axioms", check_coring(parts.coring) == [])
        if parts.grouplike is not None:
            rep.add("group-like element", is_grouplike(parts.coring, parts.grouplike.g))
    if parts.sigma is not None:
        rep.add("comodule axioms", check_comodule(parts.sigma) == [])
    for name, value in rep.conditions:
        rep.assert_(name, value)
    return rep


def _report_firm(inst_file):
    rep = TheoremReport("firmness")
    for name in sorted(inst_file.algebras):
        a = inst_file.algebras[name]
        w = is_firm_ring(a)
        rep.add(f"algebra {name} firm", w is not None)
        if w is not None:
            rep.add(f"algebra {name} tensor-square dimension", w.quotient.dim)
            rep.assert_(f"algebra {name} witness two-sided",
                        (w.mult_map @ w.d).is_identity() and (w.d @ w.mult_map).is_identity())
        rep.add(f"algebra {name} unital", a.is_unital)
    parts = inst_file.parts
    if parts.sigma is not None:
        rep.add("sigma firm on the right", is_firm_module(parts.sigma.carrier, "right") is not None)
        rep.add("sigma firm on the left", is_firm_module(parts.sigma.carrier, "left") is not None)
    return rep


def _report_galois(inst_file):
    inst = inst_file.galois_instance()
    rep = TheoremReport("galois status")
    m, ker = galois_witness(inst)
    rep.add("canonical map rows", m.rows)
    rep.add("canonical map cols", m.cols)
    rep.add("canonical map rank", m.rank())
    rep.add("kernel dimension", ker.dim)
    for i in range(ker.dim):
        rep.note("kernel basis row: " + " ".join(inst.field.show(x) for x in ker.basis.row(i)))
    rep.add("galois", is_galois(inst))
    if inst.dagger is not None:
        md = can_dagger(inst)
        rep.add("dagger canonical map rank", md.rank())
        rep.add("dagger canonical map invertible", inverse(md) is not None)
    lem = lemma_sobreideal(inst)
    for n, v in lem.conditions:
        rep.add(n, v)
    for n, v in lem.assertions:
        rep.assert_(n, v)
    return rep


def _report_correspondences(inst_file, seed=None):
    from .comonadlab import (
        alpha_from_phi,
        beta_from_phi,
        phi_from_alpha,
        phi_from_beta,
    )

    inst = inst_file.galois_instance()
    rep = TheoremReport("coaction/morphism correspondences")
    mods = inst.module_probes()
    y_probes = inst.b_probes()
    rep.add("comonad morphism identities", inst.cm.check(mods) == [])
    alpha = alpha_from_phi(inst.cm)
    rep.add("co-induced coaction diagrams", alpha.check_alpha(mods) == [])
    beta = beta_from_phi(inst.cm)
    rep.add("induced coaction diagrams", beta.check_beta(y_probes) == [])
    phi2 = phi_from_alpha(alpha)
    rt1 = all(phi2.phi(x) == inst.cm.phi(x) for x in mods)
    phi3 = phi_from_beta(beta)
    rt2 = all(phi3.phi(x) == inst.cm.phi(x) for x in mods)
    rep.add("round trip through the co-induced coaction", rt1)
    rep.add("round trip through the induced coaction", rt2)
    for n, v in rep.conditions:
        rep.assert_(n, v)
    rep.note(f"morphism representation mode: {inst.cm.mode}")
    rep.note("probe-verified")
    return rep


def _report_equivalence(inst_file):
    from .comonadlab import counit_hat, unit_hat

    inst = inst_file.galois_instance()
    rep = TheoremReport("unit/counit isomorphism summary")
    for i, y in enumerate(inst.b_probes()):
        try:
            u = unit_hat(inst.cm, y)
            rep.add(f"unit iso at base probe {i}", inverse(u) is not None)
        except LabError as e:
            rep.add(f"unit iso at base probe {i}", False)
    for i, x in enumerate(inst.comodule_probes()):
        rep.add(f"counit invertible at comodule probe {i}",
                inverse(counit_hat(inst.cm, x)) is not None)
    overall = all(v for _, v in rep.conditions)
    rep.add("equivalence", overall)
    fuerte = verify_thm_fuerte(inst)
    rep.assert_("summary matches the equivalence criterion",
                overall == fuerte.condition(
                    "tensor functor is an equivalence (units and counits iso)"))
    return rep


def run(command, inst_file, seed=None):
    """Dispatch a CLI command on a loaded instance; returns TheoremReport."""
    if command == "axioms":
        return _report_axioms(inst_file)
    if command == "firm":
        return _report_firm(inst_file)
    if command == "galois":
        return _report_galois(inst_file)
    if command == "theorem:debil":
        return verify_thm_debil(inst_file.galois_instance())
    if command == "theorem:fuerte":
        return verify_thm_fuerte(inst_file.galois_instance())
    if command == "theorem:ff":
        return verify_thm_fielmenteplano(inst_file.galois_instance())
    if command == "theorem:ge":
        return verify_thm_GE(inst_file.galois_instance())
    if command == "theorem:clasico":
        return verify_cor_clasico(inst_file.galois_instance())
    if command == "diagrams":
        return verify_diagrams(inst_file.galois_instance())
    if command == "correspondences":
        return _report_correspondences(inst_file, seed)
    if command == "equivalence":
        return _report_equivalence(inst_file)
    raise UnknownCommand(command)


def render_text(label, command, rep, seed=None):
    lines = [f"coring-lab {__version__}", f"instance: {label}", f"command: {command}"]
    if seed is not None:
        lines.append(f"seed: {seed}")
    lines += rep.lines()
    lines.append(f"result: {'PASS' if rep.ok() else 'FAIL'}")
    return "\n".join(lines) + "\n"


def render_json(label, command, rep, seed=None):
    payload = {
        "tool": f"coring-lab {__version__}",
        "instance": label,
        "command": command,
        "conditions": [[n, v] for n, v in rep.conditions],
        "assertions": [[n, v] for n, v in rep.assertions],
        "notes": list(rep.notes),
        "result": "PASS" if rep.ok() else "FAIL",
    }
    if seed is not None:
        payload["seed"] = seed
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="coring-lab",
        description="exact instance-by-instance verification of coring and "
                    "descent identities",
    )
    parser.add_argument("command", nargs="?", help="|".join(COMMANDS))
    parser.add_argument("instance", nargs="?", help="instance file or corpus id")
    parser.add_argument("--probes", help="JSON file with extra probe declarations")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--json", action="store_true", dest="as_json")
    parser.add_argument("--text", action="store_true")
    parser.add_argument("--golden", help="compare the report against this file")
    parser.add_argument("--list", action="store_true", help="list the corpus and exit")
    args = parser.parse_args(argv)

    if args.list:
        entries, generators = corpus_list()
        for ident, desc in entries:
            print(f"{ident}: {desc}")
        for ident, desc in generators:
            print(f"{ident} (generator): {desc}")
        return 0

    if not args.command or not args.instance:
        parser.print_usage()
        return 2

    try:
        path = args.instance
        import os

        if not os.path.exists(path):
            candidate = corpus_path(args.instance)
            if candidate.is_file():
                path = str(candidate)
        inst_file = load(path)
        if args.probes:
            _load_probes(inst_file, args.probes)
        rep = run(args.command, inst_file, seed=args.seed)
    except (ParseError, ValidationError, UnknownCommand, NotFirm) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    text = (render_json if args.as_json else render_text)(
        inst_file.label, args.command, rep, seed=args.seed
    )
    sys.stdout.write(text)
    if args.golden:
        try:
            with open(args.golden, "r", encoding="utf-8") as fh:
                expected = fh.read()
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        if expected != text:
            print("golden mismatch", file=sys.stderr)
            return 1
    return 0 if rep.ok() else 1


def _load_probes(inst_file, path):
    """Extra probe modules/comodules; appended to the default families."""
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    field = inst_file.parts.field
    extras = []
    for item in spec.get("extra_comodules", []):
        carrier = inst_file.bimodules.get(item.get("carrier"))
        if carrier is None:
            raise ParseError("probes", f"unknown bimodule {item.get('carrier')!r}")
        rho = _parse_matrix(field, item["rho"], "probe rho")
        x = Comodule(inst_file.parts.coring, carrier, rho)
        bad = check_comodule(x)
        if bad:
            raise ValidationError("probe comodule", bad[0])
        extras.append(x)
    inst_file.parts.extras = dict(inst_file.parts.extras or {})
    inst_file.parts.extras["probe_comodules"] = extras


if __name__ == "__main__":
    sys.exit(main())
