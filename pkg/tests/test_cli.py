import json
import os

import pytest

from coringlab import cli
from coringlab.errors import LabError, ParseError, UnknownCommand, ValidationError
from coringlab.gen_corpus import GOLDEN_MATRIX


CORPUS = os.path.join(os.path.dirname(cli.__file__), "corpus")


def corpus_file(ident):
    return os.path.join(CORPUS, ident + ".json")


# ---------------------------------------------------------------------------
# loading


def test_load_corpus_instances():
    for ident in ("i1_trivial", "i2_f4_over_f2", "i3_comatrix_k2", "i4_row_ring",
                  "i5_trivial_f4"):
        inst = cli.load(corpus_file(ident))
        assert inst.label == ident


def test_i2_coring_dimension():
    inst = cli.load(corpus_file("i2_f4_over_f2"))
    assert inst.parts.coring.dim == 4


def test_i4_loads_without_descent_data():
    inst = cli.load(corpus_file("i4_row_ring"))
    assert not inst.has_galois
    with pytest.raises(ValidationError):
        inst.galois_instance()


def test_serialize_round_trip():
    for ident in ("i1_trivial", "i2_f4_over_f2", "i3_comatrix_k2", "i4_row_ring"):
        inst = cli.load(corpus_file(ident))
        text = cli.serialize(inst)
        again = cli.load_data(json.loads(text))
        assert cli.serialize(again) == text
        assert again.parts.field == inst.parts.field
        for name in inst.algebras:
            assert again.algebras[name] == inst.algebras[name]


def test_missing_file_is_parse_error():
    with pytest.raises(ParseError):
        cli.load("/nonexistent/path.json")


def test_unknown_command():
    inst = cli.load(corpus_file("i1_trivial"))
    with pytest.raises(UnknownCommand):
        cli.run("bogus", inst)


# ---------------------------------------------------------------------------
# mutants


MUTANT_EXPECTATIONS = {
    "m01_nonassociative_algebra": "associativity fails at basis triple",
    "m02_bad_unit": "unit fails",
    "m03_delta_columns_swapped": "comultiplication",
    "m04_eps_zero": "counit law fails",
    "m05_rho_corrupt": "coaction",
    "m06_right_action_not_associative": "right action not associative",
    "m07_actions_do_not_commute": "action",
    "m08_hom_not_multiplicative": "multiplicativity fails at basis pair",
    "m09_grouplike_wrong_counit": "not group-like",
    "m10_nonprime_modulus": "prime",
    "m11_rho_not_right_linear": "coaction",
    "m12_delta_coassociativity": "coassociativity fails at basis vector",
}


def test_mutants_fail_with_localized_reports():
    mutant_dir = os.path.join(CORPUS, "mutants")
    names = sorted(os.listdir(mutant_dir))
    assert len(names) >= 10
    for name in names:
        ident = name[:-5]
        with pytest.raises(LabError) as exc:
            cli.load(os.path.join(mutant_dir, name))
        assert MUTANT_EXPECTATIONS[ident] in str(exc.value), ident


# ---------------------------------------------------------------------------
# goldens


def test_golden_reports_byte_identical():
    for ident, commands in GOLDEN_MATRIX.items():
        for command in commands:
            golden = os.path.join(CORPUS, "golden", f"{ident}__{command.replace(':', '_')}.txt")
            with open(golden, "r", encoding="utf-8") as fh:
                expected = fh.read()
            # two independent runs from fresh loads
            first = cli.render_text(ident, command, cli.run(command, cli.load(corpus_file(ident))))
            second = cli.render_text(ident, command, cli.run(command, cli.load(corpus_file(ident))))
            assert first == second
            assert first == expected, f"{ident} {command}"


def test_all_golden_reports_pass():
    for name in sorted(os.listdir(os.path.join(CORPUS, "golden"))):
        with open(os.path.join(CORPUS, "golden", name), "r", encoding="utf-8") as fh:
            assert fh.read().rstrip().endswith("result: PASS"), name


# ---------------------------------------------------------------------------
# main entry point


def test_main_exit_codes(tmp_path, capsys):
    assert cli.main(["axioms", corpus_file("i1_trivial")]) == 0
    capsys.readouterr()
    assert cli.main(["axioms", os.path.join(CORPUS, "mutants", "m02_bad_unit.json")]) == 2
    capsys.readouterr()
    assert cli.main(["bogus", corpus_file("i1_trivial")]) == 2
    capsys.readouterr()
    # golden comparison through the CLI
    golden = os.path.join(CORPUS, "golden", "i1_trivial__axioms.txt")
    assert cli.main(["axioms", "i1_trivial", "--golden", golden]) == 0
    capsys.readouterr()
    other = tmp_path / "wrong.txt"
    other.write_text("nope\n")
    assert cli.main(["axioms", "i1_trivial", "--golden", str(other)]) == 1
    capsys.readouterr()


def test_main_json_mode(capsys):
    assert cli.main(["galois", "i5_trivial_f4", "--json"]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["result"] == "PASS"
    assert ["galois", False] in payload["conditions"]
    assert ["kernel dimension", 2] in payload["conditions"]


def test_corpus_list_contents():
    entries, generators = cli.corpus_list()
    idents = [e[0] for e in entries]
    assert idents == ["i1_trivial", "i2_f4_over_f2", "i3_comatrix_k2", "i4_row_ring",
                      "i5_trivial_f4"]
    assert len(generators) == 2


def test_probes_file(tmp_path, capsys):
    # an extra probe comodule over the explicit i2 coring
    base = json.loads(open(os.path.join(CORPUS, "mutants", "m01_nonassociative_algebra.json")).read())
    # fix the corruption back to get a valid explicit instance
    base["algebras"]["A"]["mul"][0][1] = [0, 1]
    base["id"] = "i2_explicit_fixed"
    inst_path = tmp_path / "inst.json"
    inst_path.write_text(json.dumps(base))
    inst = cli.load(str(inst_path))
    probes = {
        "extra_comodules": [
            {"carrier": "C", "rho": cli._show_matrix(inst.parts.field, inst.parts.coring.delta)}
        ]
    }
    ppath = tmp_path / "probes.json"
    ppath.write_text(json.dumps(probes))
    assert cli.main(["galois", str(inst_path), "--probes", str(ppath)]) == 0
    capsys.readouterr()
