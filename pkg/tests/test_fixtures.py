import pytest

from fedlab import graphs
from fedlab.errors import UnknownFixtureError
from fedlab.fixtures import FIXTURE_NAMES, load_fixture
from fedlab.game import RandomAttacker, TableDefender, simulate, verify_certificate
from fedlab.rational import Rat


def test_fixture_names_and_unknown():
    assert set(FIXTURE_NAMES) == {
        "z8", "c10k2", "petersen", "kneser6", "kneser7", "kneser8", "kneser9",
    }
    with pytest.raises(UnknownFixtureError):
        load_fixture("nosuch")


def test_z8_fixture():
    cert = load_fixture("z8")
    assert cert.weight == Rat(8, 3)
    assert cert.graph.tag == graphs.ClassTag("moebius", (4,))
    assert len(cert.states) == 8
    assert cert.states[0].weights == (
        Rat(1), Rat(0), Rat(2, 3), Rat(0), Rat(1, 3), Rat(0), Rat(2, 3), Rat(0)
    )
    rep = verify_certificate(cert.graph, cert)
    assert rep.ok, rep.violations


def test_c10k2_fixture():
    cert = load_fixture("c10k2")
    assert cert.weight == Rat(28, 5)
    assert cert.graph.tag == graphs.ClassTag("prism", (10,))
    assert len(cert.states) == 20
    base = cert.states[0]
    assert base[0] == 1  # v0 pinned
    assert base[6] == Rat(2, 5) and base[14] == Rat(2, 5)  # v3, v7
    assert base[1] == Rat(2, 5)  # u0
    rep = verify_certificate(cert.graph, cert)
    assert rep.ok, rep.violations


def test_kneser_fixtures_verify():
    for name, weight in [
        ("petersen", Rat(3)),
        ("kneser6", Rat(3)),
        ("kneser7", Rat(8, 3)),
    ]:
        cert = load_fixture(name)
        assert cert.weight == weight
        rep = verify_certificate(cert.graph, cert)
        assert rep.ok, (name, rep.violations[:3])


def test_kneser_89_load_and_spot_check():
    for name, nset in [("kneser8", 8), ("kneser9", 9)]:
        cert = load_fixture(name)
        assert cert.weight == Rat(2 * nset - 6, nset - 4)
        g = cert.graph
        for s in cert.states[:3]:
            assert s.is_dominating(g)
            assert s.total() == cert.weight
        from fedlab.reconfig import can_reconfigure

        assert can_reconfigure(g, cert.states[0], cert.states[1]) is not None


def test_fixture_names_accept_parenthesized():
    assert load_fixture("kneser(6)") is load_fixture("kneser6")


def test_shipped_fixture_files_match_builders():
    import json
    import pathlib

    data_dir = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"
    for name in FIXTURE_NAMES:
        path = data_dir / f"{name}.json"
        assert path.exists(), path
        on_disk = json.loads(path.read_text())
        assert on_disk == load_fixture(name).to_json_dict(), name


def test_table_policy_on_fixtures_survives_random_attacks():
    # kneser8/9 are spot-checked above; the rest run the full 500 rounds
    for name in ("z8", "c10k2", "petersen", "kneser6", "kneser7"):
        cert = load_fixture(name)
        td = TableDefender(cert)
        tr = simulate(
            cert.graph, td, RandomAttacker(1234), 500, cert.states[0]
        )
        assert tr.survived(), name
