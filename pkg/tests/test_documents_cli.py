"""Document parsing and the command line front end (golden outputs)."""

import pytest

import polyprod.verify as verify
from polyprod.cli import main
from polyprod.complexes import SimplicialComplex, mask_of
from polyprod.documents import ComplexDocument, document_of, parse_document
from polyprod.verify import SuiteSpec, Trial

TRI_DOC = "ground: [1,2,3]\nfacets: [[1,2],[1,3],[2,3]]\n"
S0_DOC = "ground: [1,2]\nfacets: [[1],[2]]\n"
RP2_DOC = (
    "ground: [1,2,3,4,5,6]\n"
    "facets: [[1,2,5],[1,2,6],[1,3,4],[1,3,6],[1,4,5],"
    "[2,3,4],[2,3,5],[2,4,6],[3,5,6],[4,5,6]]\n"
)


class TestParseDocument:
    def test_round_trip(self):
        doc = parse_document(TRI_DOC)
        assert doc.render() == TRI_DOC
        assert parse_document(doc.render()) == doc

    def test_blocks_round_trip(self):
        text = "ground: [1,2,3]\nblocks: [2,1]\nfacets: [[1,2],[3]]\n"
        doc = parse_document(text)
        assert doc.blocks == (2, 1)
        assert doc.render() == text
        assert doc.block_grounds() == [mask_of([1, 2]), mask_of([3])]

    def test_comments_and_blank_lines_are_skipped(self):
        text = "# a triangle boundary\n\nground: [1,2,3]\n\nfacets: [[1,2],[1,3],[2,3]]\n"
        assert parse_document(text).complex() == parse_document(TRI_DOC).complex()

    def test_void_and_empty_face_spellings(self):
        void = parse_document("ground: [1,2]\nfacets: []\n").complex()
        assert void.is_void
        single = parse_document("ground: [1]\nfacets: [[]]\n").complex()
        assert single.faces == frozenset({0})

    def test_error_line_numbers(self):
        with pytest.raises(ValueError, match="line 2: unknown key 'foo'"):
            parse_document("ground: [1]\nfoo: 3\nfacets: []\n")
        with pytest.raises(ValueError, match="line 1: expected 'key: value'"):
            parse_document("ground [1]\n")
        with pytest.raises(ValueError, match="line 3: duplicate key 'facets'"):
            parse_document("ground: [1]\nfacets: []\nfacets: []\n")
        with pytest.raises(ValueError, match="line 1: bad JSON value for 'ground'"):
            parse_document("ground: [1,\nfacets: []\n")

    def test_missing_lines(self):
        with pytest.raises(ValueError, match="missing the ground line"):
            parse_document("facets: []\n")
        with pytest.raises(ValueError, match="missing the facets line"):
            parse_document("ground: [1]\n")

    def test_type_validation(self):
        with pytest.raises(ValueError, match="list of integers"):
            parse_document('ground: "x"\nfacets: []\n')
        with pytest.raises(ValueError, match="integer lists"):
            parse_document("ground: [1]\nfacets: [1]\n")
        with pytest.raises(ValueError, match="blocks"):
            parse_document("ground: [1]\nblocks: [[1]]\nfacets: []\n")

    def test_document_validation(self):
        with pytest.raises(ValueError, match="increasing order"):
            ComplexDocument(ground=(2, 1), facets=())
        with pytest.raises(ValueError, match="positive"):
            ComplexDocument(ground=(0, 1), facets=())
        with pytest.raises(ValueError, match="sum to the ground size"):
            ComplexDocument(ground=(1, 2), facets=(), blocks=(1,))
        with pytest.raises(ValueError, match="block sizes must be positive"):
            ComplexDocument(ground=(1,), facets=(), blocks=(0, 1))

    def test_block_grounds_requires_blocks(self):
        with pytest.raises(ValueError, match="no blocks line"):
            parse_document(TRI_DOC).block_grounds()

    def test_document_of_round_trips_through_facets(self):
        K = parse_document(RP2_DOC).complex()
        doc = document_of(K)
        assert doc.complex() == K
        K2 = SimplicialComplex.void(mask_of([1, 2]))
        assert document_of(K2).render() == "ground: [1,2]\nfacets: []\n"


@pytest.fixture
def docdir(tmp_path):
    (tmp_path / "tri.doc").write_text(TRI_DOC)
    (tmp_path / "s0.doc").write_text(S0_DOC)
    (tmp_path / "rp2.doc").write_text(RP2_DOC)
    (tmp_path / "emptyface.doc").write_text("ground: [1]\nfacets: [[]]\n")
    (tmp_path / "void.doc").write_text("ground: [1,2]\nfacets: []\n")
    (tmp_path / "full2.doc").write_text("ground: [1,2]\nfacets: [[1,2]]\n")
    return tmp_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCliDual:
    def test_triangle_boundary(self, docdir, capsys):
        code, out, err = run_cli(capsys, "dual", str(docdir / "tri.doc"))
        assert code == 0 and err == ""
        assert out == "ground: [1,2,3]\nfacets: [[]]\n"

    def test_relative_ambient(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "dual", str(docdir / "tri.doc"), "--relative-to", "1,2,3,4"
        )
        assert code == 0
        assert out == "ground: [1,2,3,4]\nfacets: [[4],[1,2,3]]\n"


class TestCliHomology:
    def test_triangle_boundary(self, docdir, capsys):
        code, out, _ = run_cli(capsys, "homology", str(docdir / "tri.doc"))
        assert code == 0 and out == "d1: Z\n"

    def test_projective_plane_coefficient_systems(self, docdir, capsys):
        path = str(docdir / "rp2.doc")
        assert run_cli(capsys, "homology", path)[1] == "d1: Z/2\n"
        # field ranks always carry an exponent
        assert run_cli(capsys, "homology", path, "--coeff", "p:2")[1] == (
            "d1: Z^1\nd2: Z^1\n"
        )
        assert run_cli(capsys, "homology", path, "--coeff", "q")[1] == "0\n"
        assert run_cli(capsys, "homology", path, "--cohomology")[1] == "d2: Z/2\n"

    def test_field_rank_rendering(self, docdir, capsys):
        out = run_cli(capsys, "homology", str(docdir / "tri.doc"), "--coeff", "q")[1]
        assert out == "d1: Z^1\n"

    def test_degenerate_complexes(self, docdir, capsys):
        assert run_cli(capsys, "homology", str(docdir / "emptyface.doc"))[1] == "d-1: Z\n"
        assert run_cli(capsys, "homology", str(docdir / "void.doc"))[1] == "0\n"


class TestCliCompose:
    def test_composition_mode(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "compose", str(docdir / "tri.doc"),
            str(docdir / "s0.doc"), str(docdir / "s0.doc"), str(docdir / "s0.doc"),
        )
        assert code == 0
        assert out == (
            "ground: [1,2,3,4,5,6]\n"
            "blocks: [2,2,2]\n"
            "facets: [[1,2,3,4,5],[1,2,3,4,6],[1,2,3,5,6],"
            "[1,2,4,5,6],[1,3,4,5,6],[2,3,4,5,6]]\n"
        )

    def test_single_empty_face_outer_returns_the_factor(self, docdir, capsys):
        one = docdir / "k1empty.doc"
        one.write_text("ground: [1]\nfacets: [[]]\n")
        code, out, _ = run_cli(capsys, "compose", str(one), str(docdir / "s0.doc"))
        assert code == 0
        assert out == "ground: [1,2]\nblocks: [2]\nfacets: [[1],[2]]\n"

    def test_void_outer_gives_void_product(self, docdir, capsys):
        one = docdir / "k1void.doc"
        one.write_text("ground: [1]\nfacets: []\n")
        code, out, _ = run_cli(capsys, "compose", str(one), str(docdir / "s0.doc"))
        assert code == 0
        assert out == "ground: [1,2]\nblocks: [2]\nfacets: []\n"

    def test_general_pairs_mode(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "compose", str(docdir / "s0.doc"), "--pairs", "general",
            str(docdir / "full2.doc"), str(docdir / "s0.doc"),
            str(docdir / "full2.doc"), str(docdir / "s0.doc"),
        )
        assert code == 0
        assert out == (
            "ground: [1,2,3,4]\n"
            "blocks: [2,2]\n"
            "facets: [[1,2,3],[1,2,4],[1,3,4],[2,3,4]]\n"
        )

    def test_general_mode_needs_document_pairs(self, docdir, capsys):
        code, _, err = run_cli(
            capsys, "compose", str(docdir / "s0.doc"), "--pairs", "general",
            str(docdir / "full2.doc"),
        )
        assert code == 2
        assert "X document and an A document" in err

    def test_general_mode_grounds_must_match(self, docdir, capsys):
        code, _, err = run_cli(
            capsys, "compose", str(docdir / "s0.doc"), "--pairs", "general",
            str(docdir / "full2.doc"), str(docdir / "emptyface.doc"),
            str(docdir / "full2.doc"), str(docdir / "s0.doc"),
        )
        assert code == 2
        assert "share one ground" in err


class TestCliHochster:
    def test_full_table(self, docdir, capsys):
        code, out, _ = run_cli(capsys, "hochster", str(docdir / "tri.doc"))
        assert code == 0
        assert out == (
            "sigma={} omega={} d0: Z\n"
            "sigma={1} omega={} d0: Z\n"
            "sigma={2} omega={} d0: Z\n"
            "sigma={1,2} omega={} d0: Z\n"
            "sigma={3} omega={} d0: Z\n"
            "sigma={1,3} omega={} d0: Z\n"
            "sigma={2,3} omega={} d0: Z\n"
            "sigma={2,3} omega={1} d0: Z\n"
            "sigma={1,3} omega={2} d0: Z\n"
            "sigma={3} omega={1,2} d1: Z\n"
            "sigma={1,2} omega={3} d0: Z\n"
            "sigma={2} omega={1,3} d1: Z\n"
            "sigma={1} omega={2,3} d1: Z\n"
            "sigma={} omega={1,2,3} d2: Z\n"
        )

    def test_single_pair(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "hochster", str(docdir / "tri.doc"), "--pairs", "1,2:3"
        )
        assert code == 0 and out == "sigma={1,2} omega={3} d0: Z\n"

    def test_cohomology_pair_with_torsion(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "hochster", str(docdir / "rp2.doc"),
            "--pairs", ":1,2,3,4,5,6", "--cohomology",
        )
        assert code == 0
        assert out == "sigma={} omega={1,2,3,4,5,6} d3: Z/2\n"

    def test_field_entries_use_exponents(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "hochster", str(docdir / "rp2.doc"),
            "--pairs", ":1,2,3,4,5,6", "--coeff", "p:2",
        )
        assert code == 0
        assert out == (
            "sigma={} omega={1,2,3,4,5,6} d2: Z^1\n"
            "sigma={} omega={1,2,3,4,5,6} d3: Z^1\n"
        )

    def test_full_simplex_has_only_empty_omega_lines(self, docdir, capsys):
        code, out, _ = run_cli(capsys, "hochster", str(docdir / "full2.doc"))
        assert code == 0
        assert out == (
            "sigma={} omega={} d0: Z\n"
            "sigma={1} omega={} d0: Z\n"
            "sigma={2} omega={} d0: Z\n"
            "sigma={1,2} omega={} d0: Z\n"
        )

    def test_void_complex_prints_nothing(self, docdir, capsys):
        code, out, _ = run_cli(capsys, "hochster", str(docdir / "void.doc"))
        assert code == 0 and out == ""

    def test_bad_pair_syntax(self, docdir, capsys):
        code, _, err = run_cli(
            capsys, "hochster", str(docdir / "tri.doc"), "--pairs", "1,2-3"
        )
        assert code == 2
        assert "must look like sigma:omega" in err


class TestCliMomentAngle:
    def test_empty_face_oracle(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "moment-angle", str(docdir / "emptyface.doc"), "--pairs", "1:0"
        )
        assert code == 0
        assert out == (
            "hat:\n  d0: Z\n"
            "bar:\n  d0: Z\n"
            "total:\n  d0: Z^2\n"
            "ledger:\n"
            "  hat sigma={} -> d0\n"
            "  hat_rel sigma={1} -> d2\n"
            "  bar sigma={} omega={1} t=0 d0: Z -> d0\n"
        )

    def test_two_point_oracle(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "moment-angle", str(docdir / "s0.doc"), "--pairs", "1:0,1:0"
        )
        assert code == 0
        assert out == (
            "hat:\n  d0: Z\n  d2: Z^2\n"
            "bar:\n  d1: Z\n  d2: Z^2\n"
            "total:\n  d0: Z\n  d1: Z\n  d2: Z^4\n"
            "ledger:\n"
            "  hat sigma={} -> d0\n"
            "  hat sigma={1} -> d2\n"
            "  hat sigma={2} -> d2\n"
            "  hat_rel sigma={1,2} -> d4\n"
            "  bar sigma={2} omega={1} t=2 d0: Z -> d2\n"
            "  bar sigma={1} omega={2} t=2 d0: Z -> d2\n"
            "  bar sigma={} omega={1,2} t=0 d1: Z -> d1\n"
        )

    def test_void_complex_sections_fall_back_to_zero(self, docdir, capsys):
        code, out, _ = run_cli(
            capsys, "moment-angle", str(docdir / "void.doc"), "--pairs", "1:0,2:1"
        )
        assert code == 0
        assert out.startswith("hat:\n  0\nbar:\n  0\ntotal:\n  0\nledger:\n")
        assert "hat_rel sigma={} -> d0" in out

    def test_parameter_count_checked(self, docdir, capsys):
        code, _, err = run_cli(
            capsys, "moment-angle", str(docdir / "tri.doc"), "--pairs", "1:0"
        )
        assert code == 2 and "expected 3 sphere pairs" in err

    def test_bad_pair_syntax(self, docdir, capsys):
        code, _, err = run_cli(
            capsys, "moment-angle", str(docdir / "tri.doc"), "--pairs", "1-0"
        )
        assert code == 2 and "must look like r:q" in err


class TestCliVerify:
    def test_small_run_reports_trials(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "dual", "--trials", "2")
        assert code == 0
        assert out == (
            "TRIAL 0 dual PASS\n"
            "TRIAL 1 dual PASS\n"
            "TRIAL 2 dual PASS\n"
            "suite dual: 3 trials, 0 failures\n"
        )

    def test_seed_changes_subseeds(self, capsys):
        _, out, _ = run_cli(
            capsys, "verify", "slice-dual", "--trials", "1", "--seed", "3"
        )
        assert out.splitlines()[0] == "TRIAL 3000009 slice-dual PASS"

    def test_failing_suite_exits_one(self, capsys, monkeypatch):
        def fake(trials, max_vertices, seed):
            yield Trial(7, "always-fail", False, "planted counterexample")

        monkeypatch.setitem(
            verify.SUITES, "always-fail", SuiteSpec(fake, 1, 1, "planted")
        )
        code, out, _ = run_cli(capsys, "verify", "always-fail")
        assert code == 1
        assert out == (
            "TRIAL 7 always-fail FAIL\n"
            "  planted counterexample\n"
            "suite always-fail: 1 trials, 1 failures\n"
        )

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "nosuch")
        assert code == 2 and "unknown suite 'nosuch'" in err


class TestCliErrors:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "homology", "missing.doc")
        assert code == 2
        assert err.startswith("error: cannot read missing.doc")

    def test_bad_coefficient_specs(self, docdir, capsys):
        path = str(docdir / "tri.doc")
        code, _, err = run_cli(capsys, "homology", path, "--coeff", "p:6")
        assert code == 2 and "must be prime" in err
        code, _, err = run_cli(capsys, "homology", path, "--coeff", "f2")
        assert code == 2 and "coefficients must be z, q or p:<prime>" in err
        code, _, err = run_cli(capsys, "homology", path, "--coeff", "p:x")
        assert code == 2 and "bad prime" in err

    def test_parse_errors_name_the_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.doc"
        bad.write_text("ground: [1]\n")
        code, _, err = run_cli(capsys, "homology", str(bad))
        assert code == 2
        assert "bad.doc: document is missing the facets line" in err
