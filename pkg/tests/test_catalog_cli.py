"""Serialization, the builtin catalog, and the command line interface."""

import json

import pytest

from mdtk.catalog_cli import (
    builtin,
    builtin_names,
    catalog_entries,
    catalog_sweep,
    from_dict,
    load,
    main,
    save,
    to_dict,
)
from mdtk.construct import fibonacci, ising
from mdtk.modular import DataFormatError, data_equal, verify


# -------------------------------------------------------- serialization


def test_round_trip_exact(tmp_path):
    for md in (ising(1, 1), fibonacci(2), builtin("so5level9-1"),
               builtin("pointed-c7"), builtin("double-c3")):
        path = tmp_path / f"{md.name}.json"
        save(md, str(path))
        again = load(str(path))
        assert data_equal(again, md)
        assert again.name == md.name
        assert again.labels == md.labels


def test_dict_round_trip():
    md = ising(3, -1)
    obj = to_dict(md)
    # serialized form is plain JSON types with string fractions
    blob = json.dumps(obj)
    again = from_dict(json.loads(blob))
    assert data_equal(again, md)


def test_from_dict_validates_structure():
    with pytest.raises(DataFormatError):
        from_dict({"labels": ["1"]})
    with pytest.raises(DataFormatError):
        from_dict({"labels": ["1"], "S": [], "T": []})


def test_from_dict_rejects_wrong_unit():
    obj = to_dict(ising(1, 1))
    obj["S"][0][0] = {"n": 1, "c": [["2", "1"]]}
    obj["S"][0][1], obj["S"][1][0] = obj["S"][0][0], obj["S"][0][0]
    with pytest.raises(DataFormatError, match="unit normalization"):
        from_dict(obj)


def test_from_dict_rejects_asymmetric():
    obj = to_dict(ising(1, 1))
    obj["S"][1][2] = {"n": 1, "c": [["7", "1"]]}
    with pytest.raises(DataFormatError):
        from_dict(obj)


def test_from_dict_rejects_field_outsider():
    # an S entry outside Q(zeta_N) for N the lcm of twist orders
    obj = to_dict(builtin("pointed-c5"))
    alien = {"n": 7, "c": [["0", "1"], ["1", "1"], ["0", "1"],
                           ["0", "1"], ["0", "1"], ["0", "1"]]}
    obj["S"][1][2] = alien
    obj["S"][2][1] = alien
    with pytest.raises(DataFormatError, match="field"):
        from_dict(obj)


def test_from_dict_rejects_bad_coefficient_length():
    obj = to_dict(ising(1, 1))
    obj["S"][2][2] = {"n": 8, "c": [["0", "1"]]}
    with pytest.raises(DataFormatError, match="phi"):
        from_dict(obj)


# -------------------------------------------------------------- catalog


def test_builtin_names_census():
    names = builtin_names()
    assert len(names) == 32
    assert len([n for n in names if n.startswith("ising-")]) == 16
    assert len([n for n in names if n.startswith("fibonacci-")]) == 4
    assert len([n for n in names if n.startswith("so5level9-")]) == 6
    assert "pointed-c3" in names and "pointed-c9" in names
    assert "double-c2" in names and "double-c3" in names


def test_builtin_lookup():
    md = builtin("fibonacci-2")
    assert data_equal(md, fibonacci(2))
    with pytest.raises(DataFormatError):
        builtin("no-such-entry")


def test_catalog_entries_metadata():
    entries = catalog_entries()
    assert len(entries) == 32
    for e in entries:
        assert e.name == e.datum.name
        assert e.source
    spot = {e.name: e for e in entries}
    assert verify(spot["pointed-c9"].datum).ok


def test_catalog_sweep_runs_clean():
    import io

    sink = io.StringIO()
    assert catalog_sweep(sink)
    out = sink.getvalue()
    assert "0 violations" in out
    assert "FAIL" not in out
    # silent mode only returns the flag
    assert catalog_sweep() is True


# ------------------------------------------------------------------ CLI


def test_cli_verify_builtin(capsys):
    assert main(["verify", "ising-1-p"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out


def test_cli_verify_json(capsys):
    assert main(["verify", "ising-1-p", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["ok"] is True
    assert {c["name"] for c in obj["checks"]} >= {"balancing", "s-symmetric"}


def test_cli_verify_file(tmp_path, capsys):
    path = tmp_path / "fib.json"
    save(fibonacci(1), str(path))
    assert main(["verify", str(path)]) == 0
    capsys.readouterr()


def test_cli_unknown_datum(capsys):
    assert main(["verify", "not-a-real-name"]) == 1
    err = capsys.readouterr()
    assert "not-a-real-name" in err.err or "not-a-real-name" in err.out


def test_cli_bad_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_cli_construct_bad_parameter(capsys):
    # family validation errors must render as one-line errors, not tracebacks
    assert main(["construct", "ising", "--j", "4"]) == 1
    assert "odd mod 16" in capsys.readouterr().err
    assert main(["construct", "so5level9", "--j", "3"]) == 1
    assert "unit mod 9" in capsys.readouterr().err


def test_cli_report(capsys):
    assert main(["report", "fibonacci-1", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["rank"] == 2
    assert obj["ndim"] == 5
    assert obj["fs_exponent"] == 5
    assert obj["normalized_t_order"] == 20
    assert obj["gamma"] == "z20^11"
    assert obj["anomaly"] == "z10^3"


def test_cli_fusion(capsys):
    assert main(["fusion", "ising-1-p"]) == 0
    out = capsys.readouterr().out
    assert "sigma" in out


def test_cli_orbits(capsys):
    assert main(["orbits", "fibonacci-1", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["working_conductor"] == 60
    rows = {r["label"]: r for r in obj["orbits"]}
    assert rows["1"]["orbit"] == ["1", "tau"]
    assert rows["1"]["squared_orbit"] == ["1"]


def test_cli_construct_writes_file(tmp_path, capsys):
    path = tmp_path / "c7.json"
    rc = main(["construct", "pointed", "--orders", "7", "--exps", "1",
               "-o", str(path)])
    assert rc == 0
    capsys.readouterr()
    md = load(str(path))
    assert md.rank == 7
    assert verify(md).ok


def test_cli_construct_ising(tmp_path, capsys):
    path = tmp_path / "is.json"
    assert main(["construct", "ising", "--j", "3", "--eps", "-1",
                 "-o", str(path)]) == 0
    capsys.readouterr()
    assert data_equal(load(str(path)), ising(3, -1))


def test_cli_conjugate(tmp_path, capsys):
    path = tmp_path / "conj.json"
    assert main(["conjugate", "fibonacci-1", "--k", "7", "-o", str(path)]) == 0
    capsys.readouterr()
    assert data_equal(load(str(path)), fibonacci(2))


def test_cli_product(tmp_path, capsys):
    path = tmp_path / "prod.json"
    assert main(["product", "ising-1-p", "ising-3-p", "-o", str(path)]) == 0
    capsys.readouterr()
    md = load(str(path))
    assert md.rank == 9
    assert verify(md).ok


def test_cli_bound_check(capsys):
    assert main(["bound-check", "ising-1-p"]) == 0
    out = capsys.readouterr().out
    assert "16 <= 16" in out


def test_cli_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    for name in ("ising-1-p", "fibonacci-4", "so5level9-8", "double-c3"):
        assert name in out


def test_cli_catalog_all(capsys):
    assert main(["catalog", "--all"]) == 0
    out = capsys.readouterr().out
    assert "0 violations" in out


def test_cli_load_error_is_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"labels\": [\"1\"]}")
    assert main(["verify", str(bad)]) == 1
    capsys.readouterr()
