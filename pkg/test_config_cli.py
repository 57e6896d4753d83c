"""
Files, Sampling, Suites and CLI Test Suite
Configuration JSON, seeded samplers, the boundary census, verification
reports and the command-line surface
"""

import json
from fractions import Fraction

import pytest

from cli import EXIT_INPUT_ERROR, EXIT_OK, cli_main
from conftest import MERSENNE_31, veronese_config
from src import __version__
from src.bridge import StratumKind, classify, degenerate_limit_check_I
from src.fields import FieldDescriptor
from src.geometry import INFINITY, PlaneConfig, Point2
from src.moduli import P1Config
from src.serialization import (
    config_from_dict,
    decode_field,
    decode_scalar,
    encode_scalar,
    p1_config_file,
    parse_config,
    parse_field_choice,
    plane_config_file,
    serialize_config,
)
from src.utils.exceptions import ExhaustedRetries, ParseError, UnknownSuite
from src.utils.helpers import SplitMix64, mix_seed
from src.verification import (
    DivisorClass,
    DivisorLabel,
    SUITES,
    TrialOutcome,
    TrialPlan,
    boundary_divisors,
    census_summary,
    detect_divisors,
    random_collinear_config,
    random_degenerate_limit_witness,
    random_generic_config,
    random_on_conic_config,
    run_suite,
)

VERONESE_JSON = {
    "field": {"kind": "rational"},
    "plane_config": {"points": [["1", "1", "1"], ["1", "2", "4"], ["1", "3", "9"],
                                ["1", "4", "16"], ["1", "5", "25"], ["0", "1", "0"]]},
}


# configuration files

def test_parse_plane_configuration(veronese):
    cfg = parse_config(json.dumps(VERONESE_JSON))
    assert cfg.field == FieldDescriptor.rationals()
    assert cfg.plane_config == veronese


def test_serialization_is_canonical(veronese, Q):
    text = serialize_config(plane_config_file(veronese))
    assert json.loads(text) == VERONESE_JSON
    assert text.endswith("\n")
    scaled = PlaneConfig.of(Q, [(2, 2, 2), (3, 6, 12), (1, 3, 9), (1, 4, 16), (1, 5, 25), (0, 7, 0)])
    assert serialize_config(plane_config_file(scaled)) == text
    assert parse_config(text).plane_config == veronese


def test_integer_and_fraction_coordinates(Q):
    data = {"field": {"kind": "rational"},
            "plane_config": {"points": [[1, 1, 1], ["1/2", "1", "2"], [1, 3, 9], [1, 4, 16], [1, 5, 25], [0, 1, 0]]}}
    cfg = config_from_dict(data)
    assert cfg.plane_config[2] == Point2.of(Q, 1, 2, 4)


def test_prime_field_files(Fp):
    data = dict(VERONESE_JSON, field={"kind": "prime", "p": str(MERSENNE_31)})
    cfg = config_from_dict(data)
    assert cfg.field == Fp
    assert cfg.plane_config == veronese_config(Fp)
    assert json.loads(serialize_config(cfg))["field"] == {"kind": "prime", "p": "2147483647"}


def test_coincident_points_stay_raw():
    data = json.loads(json.dumps(VERONESE_JSON))
    data["plane_config"]["points"][1] = ["1", "1", "1"]
    cfg = config_from_dict(data)
    assert cfg.plane_config is None
    assert len(cfg.raw_points) == 6


def test_p1_configuration_round_trip(Q):
    cfg = P1Config.from_affine(Q, [0, 1, INFINITY, Fraction(-1, 3)], "2,2,1,1")
    text = serialize_config(p1_config_file(cfg))
    data = json.loads(text)
    assert data["p1_config"]["points"][2] == ["0", "1"]
    assert data["p1_config"]["points"][3] == ["1", "-1/3"]
    assert data["p1_config"]["weights"] == [2, 2, 1, 1]
    assert parse_config(text).p1_config == cfg


def test_json_errors_carry_the_line():
    with pytest.raises(ParseError) as info:
        parse_config('{\n  "field": \n}')
    assert info.value.line == 3


@pytest.mark.parametrize("data,path", [
    ({"plane_config": {"points": []}}, "field"),
    ({"field": {"kind": "prime", "p": "4"}, "plane_config": {}}, "field.p"),
    ({"field": {"kind": "prime", "p": 17.5}, "plane_config": {}}, "field.p"),
    ({"field": {"kind": "complex"}, "plane_config": {}}, "field.kind"),
    ({"field": {"kind": "rational"}}, "$"),
    ({"field": {"kind": "rational"}, "plane_config": {"points": [["1", "2"]]}}, "plane_config.points[0]"),
    ({"field": {"kind": "rational"}, "plane_config": {"points": [["0", "0", "0"]]}}, "plane_config.points[0]"),
    ({"field": {"kind": "rational"}, "p1_config": {"points": [["1", "0"], ["0", "1"], ["1", "1"]],
                                                 "weights": [2.5, 2, 1]}}, "p1_config.weights"),
])
def test_malformed_files_name_the_member(data, path):
    with pytest.raises(ParseError) as info:
        config_from_dict(data)
    assert info.value.path == path


def test_wrong_point_count():
    data = {"field": {"kind": "rational"}, "plane_config": {"points": [["1", "0", "0"]] * 5}}
    with pytest.raises(ParseError) as info:
        config_from_dict(data)
    assert info.value.path == "plane_config.points"


def test_scalar_decoding(Q, F101):
    assert decode_scalar("3/4", Q) == Q.element(Fraction(3, 4))
    assert decode_scalar(" -7 ", Q) == Q.element(-7)
    assert decode_scalar("1/2", F101) == F101.element(51)
    with pytest.raises(ParseError):
        decode_scalar("1//2", Q)
    with pytest.raises(ParseError):
        decode_scalar("1.5", Q)
    with pytest.raises(ParseError):
        decode_scalar("1/101", F101)


def test_extension_scalars(Q):
    x = decode_scalar({"a": "1", "b": "1", "d": "2"}, Q)
    assert x.field == FieldDescriptor.quadratic(Q, 2)
    assert encode_scalar(x) == {"a": "1", "b": "1", "d": "2"}
    assert encode_scalar(x.field.element(3)) == "3"
    with pytest.raises(ParseError):
        decode_scalar({"a": "1", "b": "1"}, Q)
    with pytest.raises(ParseError):
        decode_scalar({"a": "1", "b": "1", "d": "4"}, Q)


def test_prime_extension_scalars_are_rewritten_over_one_radicand(F101):
    x = decode_scalar({"a": "0", "b": "1", "d": "3"}, F101)
    assert x.field == FieldDescriptor.quadratic(F101, 2)
    assert x * x == x.field.element(3)
    assert encode_scalar(x)["d"] == "2"
    assert decode_scalar(encode_scalar(x), F101) == x


def test_decode_field():
    assert decode_field({"kind": "prime", "p": 101}) == FieldDescriptor.prime(101)
    with pytest.raises(ParseError) as info:
        decode_field({"kind": "prime", "p": "4"})
    assert info.value.path == "field.p"


def test_field_choices(Fp):
    assert parse_field_choice("rational") == FieldDescriptor.rationals()
    assert parse_field_choice(f"prime:{MERSENNE_31}") == Fp
    for bad in ("prime:4", "prime:x", "complex"):
        with pytest.raises(ParseError) as info:
            parse_field_choice(bad)
        assert info.value.path == "--field"


# sampling

def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert rng.next64() == 0xE220A8397B1DCDAF
    assert mix_seed(5, 0) == SplitMix64(5).next64()
    assert mix_seed(5, 1) != mix_seed(5, 0)


def test_randbelow_stays_in_range():
    rng = SplitMix64(11)
    draws = [rng.randbelow(7) for _ in range(200)]
    assert set(draws) <= set(range(7))
    assert sorted(SplitMix64(3).shuffled(range(5))) == [0, 1, 2, 3, 4]


def test_generic_sampler_is_deterministic(Fp):
    a = random_generic_config(7, Fp)
    b = random_generic_config(7, Fp)
    assert a == b
    assert classify(a).kind is StratumKind.GENERIC_SMOOTH


def test_rational_sampler_uses_bounded_integers(Q):
    cfg = random_generic_config(3, Q, height=50)
    assert classify(cfg).kind is StratumKind.GENERIC_SMOOTH
    assert cfg == random_generic_config(3, Q, height=50)


def test_stratum_samplers(Fp):
    collinear = random_collinear_config(9, Fp, pair=(2, 4))
    assert classify(collinear).pair == (2, 4)
    assert classify(random_on_conic_config(9, Fp)).kind is StratumKind.ON_CONIC
    witness = random_degenerate_limit_witness(9, Fp)
    assert degenerate_limit_check_I(witness)["passed"]


def test_samplers_give_up_on_tiny_fields():
    with pytest.raises(ExhaustedRetries):
        random_generic_config(1, FieldDescriptor.prime(5), max_retries=25)


# boundary census

def test_thirty_six_boundary_divisors():
    labels, orbits = boundary_divisors()
    assert len(labels) == 36
    assert [len(orbit) for orbit in orbits] == [1, 10, 10, 10, 5]
    summary = census_summary()
    assert summary["total"] == 36
    assert summary["classes"] == {"A_OnConic": 1, "B_CollinearWith6": 10,
                                  "C_CollinearAmong5": 10, "D_Collision": 15}
    assert summary["orbits"][4]["members"][0] == "D_Collision(1,6)"


def test_divisor_labels():
    assert str(DivisorLabel(DivisorClass.COLLINEAR_AMONG_5, (3, 1, 2))) == "C_CollinearAmong5(1,2,3)"
    with pytest.raises(ValueError):
        DivisorLabel(DivisorClass.COLLINEAR_WITH_6, (1, 6))


def test_detect_divisors(veronese, on_conic_cfg, collinear_cfg, degenerate_witness):
    assert detect_divisors(veronese.points) == set()
    assert detect_divisors(on_conic_cfg.points) == {DivisorLabel(DivisorClass.ON_CONIC)}
    assert detect_divisors(collinear_cfg.points) == {DivisorLabel(DivisorClass.COLLINEAR_WITH_6, (1, 2))}
    assert detect_divisors(degenerate_witness.points) == {
        DivisorLabel(DivisorClass.COLLINEAR_WITH_6, (1, 2)),
        DivisorLabel(DivisorClass.COLLINEAR_AMONG_5, (1, 3, 4)),
    }
    collided = list(veronese.points)
    collided[3] = collided[0]
    assert detect_divisors(collided) == {DivisorLabel(DivisorClass.COLLISION, (1, 4))}


def test_line_pairs_are_not_on_a_conic(Q):
    points = [Point2.of(Q, *c) for c in ((1, 0, 0), (1, 0, 1), (1, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2))]
    assert detect_divisors(points) == {
        DivisorLabel(DivisorClass.COLLINEAR_AMONG_5, (1, 2, 3)),
        DivisorLabel(DivisorClass.COLLINEAR_WITH_6, (4, 5)),
    }


# suites and reports

def test_trial_outcomes_keep_the_first_failure():
    out = TrialOutcome(3)
    assert out.check(True, "fine")
    assert not out.check(False, "first")
    out.check(False, "second")
    assert out.failures == [{"trial": 3, "assertion": "first", "input": {}}]
    assert not out.passed


def test_plans_need_trials(Fp):
    with pytest.raises(ValueError):
        TrialPlan("boundary", 0, 1, Fp)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass(suite, Fp):
    report = run_suite(TrialPlan(suite, 3, 42, Fp), progress=False)
    assert report.ok, report.failures
    data = report.to_dict()
    assert data["passed"] == 3
    assert data["failed"] == 0
    assert data["field"] == f"prime:{MERSENNE_31}"
    assert data["version"] == __version__


def test_suites_are_reproducible(Fp):
    plan = TrialPlan("phi-equivariance", 2, 1234, Fp)
    first = run_suite(plan, progress=False)
    assert first.ok, first.failures
    assert first.to_json() == run_suite(plan, progress=False).to_json()


def test_worker_processes_give_the_same_report(Fp):
    plan = TrialPlan("phi-equivariance", 4, 99, Fp)
    pooled = run_suite(plan, workers=2, progress=False)
    assert pooled.ok, pooled.failures
    assert pooled.to_json() == run_suite(plan, workers=1, progress=False).to_json()


def test_phi_equivariance_over_the_default_prime(Fp):
    report = run_suite(TrialPlan("phi-equivariance", 20, 42, Fp), progress=False)
    assert report.passed == 20, report.failures


def test_unknown_suite(Fp):
    with pytest.raises(UnknownSuite):
        run_suite(TrialPlan("nonsense", 1, 1, Fp), progress=False)


# command line

@pytest.fixture
def config_dir(tmp_path):
    settings = tmp_path / "config"
    settings.mkdir()
    (settings / "settings.yaml").write_text(
        "verification:\n"
        "  trials: 2\n"
        "  seed: 7\n"
        f"  field: \"prime:{MERSENNE_31}\"\n"
        "  progress: false\n"
        "output:\n"
        "  indent: 2\n"
        "logging:\n"
        "  level: \"WARNING\"\n"
        "  log_file: null\n",
        encoding="utf-8",
    )
    return str(settings)


@pytest.fixture
def veronese_file(tmp_path):
    path = tmp_path / "veronese.json"
    path.write_text(json.dumps(VERONESE_JSON), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_cli_classify(capsys, config_dir, veronese_file):
    code, data = run_cli(capsys, "--config-dir", config_dir, "classify", "-i", veronese_file)
    assert code == EXIT_OK
    assert data == {"stratum": "GenericSmooth"}


def test_cli_phi(capsys, config_dir, veronese_file):
    code, data = run_cli(capsys, "--config-dir", config_dir, "phi", "-i", veronese_file)
    assert code == EXIT_OK
    assert data["ordered"] == [["1", "1"], ["1", "4"], ["1", "9"], ["1", "16"], ["1", "25"]]
    assert data["pair"] == [["0", "1"], ["1", "0"]]
    assert data["merged"] == "2^5,1^2"


def test_cli_fiber(capsys, config_dir, veronese_file):
    code, data = run_cli(capsys, "--config-dir", config_dir, "fiber", "-i", veronese_file)
    assert code == EXIT_OK
    assert data["size"] == 16
    assert len(data["members"]) == 16


def test_cli_swap(capsys, config_dir, veronese_file):
    code, data = run_cli(capsys, "--config-dir", config_dir, "swap", "--set", "3,4,5")
    assert code == EXIT_OK
    assert data == {"swap": "{3,4,5}", "word": "tau(1,2)*psi(1,2,6)", "length": 2}
    code, data = run_cli(capsys, "--config-dir", config_dir, "swap", "--set", "{}", "-i", veronese_file)
    assert code == EXIT_OK
    assert data["length"] == 0
    assert data["image"] == VERONESE_JSON


def test_cli_descendants(capsys, config_dir):
    code, data = run_cli(capsys, "--config-dir", config_dir, "descendants", "--mu", "1^12", "--points", "7")
    assert code == EXIT_OK
    assert data["count"] == 6
    assert "2^5,1^2" in data["descendants"]


def test_cli_boundary_to_file(capsys, config_dir, tmp_path):
    out = tmp_path / "census.json"
    assert cli_main(["--config-dir", config_dir, "boundary", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["total"] == 36


def test_cli_verify(capsys, config_dir):
    code, data = run_cli(capsys, "--config-dir", config_dir, "verify", "--suite", "descendants", "--no-progress")
    assert code == EXIT_OK
    assert data["trials"] == 2
    assert data["seed"] == 7
    assert data["passed"] == 2


@pytest.mark.parametrize("argv,error", [
    (["verify", "--suite", "nonsense"], "UnknownSuite"),
    (["verify", "--suite", "stability", "--field", "prime:4"], "ParseError"),
    (["frobnicate"], "ParseError"),
    (["descendants", "--mu", "1^12", "--points", "2"], "ValueError"),
    (["swap", "--set", "1,x"], "ParseError"),
])
def test_cli_input_errors(capsys, config_dir, argv, error):
    code, data = run_cli(capsys, "--config-dir", config_dir, *argv)
    assert code == EXIT_INPUT_ERROR
    assert data["error"] == error


def test_cli_bad_files(capsys, config_dir, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{ not json", encoding="utf-8")
    code, data = run_cli(capsys, "--config-dir", config_dir, "classify", "-i", str(broken))
    assert code == EXIT_INPUT_ERROR
    assert data["error"] == "ParseError"

    doubled = tmp_path / "doubled.json"
    points = [["1", "1", "1"]] * 2 + VERONESE_JSON["plane_config"]["points"][2:]
    doubled.write_text(json.dumps({"field": {"kind": "rational"}, "plane_config": {"points": points}}),
                       encoding="utf-8")
    code, data = run_cli(capsys, "--config-dir", config_dir, "classify", "-i", str(doubled))
    assert code == EXIT_INPUT_ERROR
    assert data["error"] == "InvalidConfiguration"

    code, data = run_cli(capsys, "--config-dir", config_dir, "classify", "-i", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT_ERROR
