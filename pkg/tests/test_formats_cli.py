import json
import os

import pytest

from fundom import InputError, Perm, RatVec, make_ineq, ssp
from fundom.cli import main
from fundom.formats import (cut_lines, fraction_str, group_json,
                            parse_cycles, parse_fraction, parse_group,
                            parse_permutation, parse_system, system_json)

from conftest import cyc, cyclic_triples

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def group_path(name):
    return os.path.join(FIXTURES, "groups", name)


class TestParsing:
    def test_fraction_round_trip(self):
        for text in ("3", "-7", "1/2", "-9/4"):
            assert fraction_str(parse_fraction(text)) == text
        with pytest.raises(InputError):
            parse_fraction("1/0")
        with pytest.raises(InputError):
            parse_fraction("abc")

    def test_cycles(self):
        g = parse_cycles("(1 2 3)(4 5)", 6)
        assert g == Perm.from_cycles(6, [[0, 1, 2], [3, 4]])
        assert parse_cycles("()", 3).is_identity()
        assert parse_cycles("(1, 2)", 2) == Perm.from_cycles(2, [[0, 1]])

    def test_cycle_errors_name_the_token(self):
        with pytest.raises(InputError, match="out of range"):
            parse_cycles("(1 9)", 3)
        with pytest.raises(InputError, match="repeated"):
            parse_cycles("(1 2)(2 3)", 3)
        with pytest.raises(InputError, match="unexpected"):
            parse_cycles("(1 2) junk", 3)

    def test_image_arrays(self):
        assert parse_permutation([2, 3, 1], 3) == Perm.from_cycles(3, [[0, 1, 2]])
        with pytest.raises(InputError, match="bijection"):
            parse_permutation([1, 1, 3], 3)
        with pytest.raises(InputError, match="out of range"):
            parse_permutation([0, 1, 2], 3)
        with pytest.raises(InputError, match="expected"):
            parse_permutation([1, 2], 3)

    def test_group_round_trip(self):
        G = cyclic_triples(6)
        doc = group_json(G)
        back = parse_group(doc)
        assert back.degree == G.degree
        assert [g.images for g in back.generators] == [g.images for g in G.generators]
        assert back.order() == G.order()

    def test_group_accepts_both_forms(self):
        doc = {"n": 3, "generators": ["(1 2 3)", [2, 1, 3]]}
        G = parse_group(doc)
        assert G.order() == 6

    def test_group_errors(self):
        with pytest.raises(InputError):
            parse_group({"generators": []})
        with pytest.raises(InputError):
            parse_group({"n": 0, "generators": []})
        with pytest.raises(InputError):
            parse_group([1, 2])


class TestSystemJson:
    def test_round_trip(self):
        system = ssp(cyclic_triples(6))
        doc = system_json(system)
        back = parse_system(doc)
        assert [q.normal for q in back.ineqs] == [q.normal for q in system.ineqs]
        assert [q.g.images for q in back.ineqs] == [q.g.images for q in system.ineqs]

    def test_gamma_mismatch_rejected(self):
        system = ssp(cyc(3))
        doc = system_json(system)
        doc["ineqs"][0]["gamma"] = ["5", "0", "0"]
        with pytest.raises(InputError, match="gamma"):
            parse_system(doc)

    def test_cut_lines(self):
        q = make_ineq(RatVec([4, 2, 1]), Perm.from_cycles(3, [[0, 1, 2]]))
        system = ssp(cyc(3))
        text = cut_lines(system)
        assert text == "1 x1 - 1 x2 >= 0\n1 x1 - 1 x3 >= 0\n"
        assert q.normal == (2, 1, -3)


class TestCli:
    def test_info(self, capsys):
        assert main(["info", group_path("cyclic_triples_n6.json")]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["order"] == 9
        assert doc["orbits"] == [[1, 2, 3], [4, 5, 6]]

    def test_info_single_diagonal_generator(self, capsys):
        assert main(["info", group_path("diag_c3_n6.json")]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["order"] == 3
        assert doc["orbits"] == [[1, 2, 3], [4, 5, 6]]

    def test_gen_reduced_s3(self, capsys):
        assert main(["gen", group_path("s3.json"), "--construction", "ssp-reduced"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["ineqs"]) == 2

    def test_gen_writes_files_and_cuts(self, tmp_path):
        out = tmp_path / "sys.json"
        cuts = tmp_path / "cuts.txt"
        assert main(["gen", group_path("cyclic_triples_n6.json"), "--construction", "gdd",
                     "-o", str(out), "--cuts", str(cuts)]) == 0
        doc = json.loads(out.read_text())
        assert len(doc["ineqs"]) == 4
        assert len(cuts.read_text().strip().splitlines()) == 4

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert main(["verify", group_path("c3.json"), "--construction", "ssp",
                         "--trials", "50", "--seed", "9", "-o", str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_golden_check(self, tmp_path):
        golden = tmp_path / "golden.json"
        assert main(["gen", group_path("s3.json"), "--construction", "ssp",
                     "-o", str(golden)]) == 0
        assert main(["gen", group_path("s3.json"), "--construction", "ssp",
                     "-o", os.devnull, "--check-golden", str(golden)]) == 0
        # a different construction must mismatch
        assert main(["gen", group_path("s3.json"), "--construction", "ssp-reduced",
                     "-o", os.devnull, "--check-golden", str(golden)]) == 5

    def test_shipped_goldens(self, capsys):
        golden_dir = os.path.join(FIXTURES, "golden")
        names = sorted(os.listdir(golden_dir))
        assert names, "golden fixtures missing"
        for fname in names:
            stem, construction = fname[:-len(".json")].rsplit("__", 1)
            rc = main(["gen", group_path(stem + ".json"),
                       "--construction", construction.replace("_", "-"),
                       "-o", os.devnull,
                       "--check-golden", os.path.join(golden_dir, fname)])
            capsys.readouterr()
            assert rc == 0, fname

    def test_verify_exit_codes(self, tmp_path):
        assert main(["verify", group_path("c3.json"), "--construction", "ssp",
                     "--trials", "50", "-o", os.devnull]) == 0

    def test_effectiveness_cli(self, capsys):
        assert main(["effectiveness", group_path("cyclic_triples_n6.json"),
                     "--construction", "ssp"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["lambda"] == 4

    def test_lexcheck_cli(self, capsys):
        assert main(["lexcheck", group_path("c3.json"), "--samples", "20"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["all_agree"] is True
        assert doc["lex_closed"] is False
        assert len(doc["results"]) == 20

    def test_lexcheck_vector_file(self, tmp_path, capsys):
        vecs = tmp_path / "vecs.json"
        vecs.write_text(json.dumps([["1", "1", "0"], ["0", "1", "1"]]))
        assert main(["lexcheck", group_path("c3.json"), "--vectors", str(vecs)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [r["in_closure"] for r in doc["results"]] == [True, False]
        assert doc["results"][1]["lex_max"] == ["1", "1", "0"]

    def test_orbits_cli(self, capsys):
        assert main(["orbits", group_path("c3.json")]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["binary_orbits"]) == 4

    def test_bad_input_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 3, "generators": ["(1 9)"]}')
        assert main(["info", str(bad)]) == 2

    def test_cap_exit_code(self, capsys):
        assert main(["verify", group_path("s6.json"), "--construction", "dirichlet",
                     "--enum-cap", "10", "-o", os.devnull]) == 3

    def test_construction_rejection_exit_code(self, tmp_path, capsys):
        gamma = tmp_path / "gamma.json"
        gamma.write_text(json.dumps([["1", "1", "0", "0", "0", "0"]]))
        assert main(["gen", group_path("cyclic_triples_n6.json"), "--construction", "gdd",
                     "--gamma", "file:" + str(gamma), "-o", os.devnull]) == 4

    def test_missing_group_file(self, capsys):
        assert main(["info", "no_such_file.json"]) == 2
