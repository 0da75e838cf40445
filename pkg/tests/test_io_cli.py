import json

import numpy as np
import pytest

from pivotfun import io as pio
from pivotfun.cdagcat import fhilb, ghilb, object_from_json, object_to_json, standard_duality, tensor_obj
from pivotfun.cli import main
from pivotfun.frobenius import pair_of_pants, pointwise_monoid, trivial_monoid
from pivotfun.bimodule import column_bimodule, row_bimodule
from pivotfun.groups import cyclic
from pivotfun.repg import canonical_fibre_functor, character_list
from pivotfun.upt import Modification, graded_upt, twist_upt, upt_compose, upt_equal


@pytest.fixture
def z2_upt(z2, z2_objs):
    return graded_upt(z2, [1, 1], z2_objs)


def write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(pio.dumps(payload))
    return str(p)


def test_float_formatting_17_digits():
    text = pio.dumps({"x": 0.1})
    assert "0.10000000000000001" in text


def test_object_json_round_trip(z2):
    for x in (fhilb(3), ghilb(z2, [2, 1])):
        assert object_from_json(object_to_json(x)) == x
    # composite (kron-ordered) gradings carry an explicit grade list
    comp = tensor_obj(ghilb(z2, [1, 1]), ghilb(z2, [1, 1]))
    enc = object_to_json(comp)
    assert "grades" in enc
    assert object_from_json(enc) == comp


def test_artifact_round_trips(z2, z2_objs, z2_upt):
    f = canonical_fibre_functor(z2_objs)
    assert pio.functor_from_json(pio.functor_to_json(f)).structurally_equal(f)
    a = pio.upt_from_json(pio.upt_to_json(z2_upt))
    assert upt_equal(a, z2_upt)
    m = pointwise_monoid(2)
    m2 = pio.monoid_from_json(pio.monoid_to_json(m))
    assert m2.structurally_equal(m)
    bm = column_bimodule(2)
    bm2 = pio.bimodule_from_json(pio.bimodule_to_json(bm))
    assert np.array_equal(bm.action.mat, bm2.action.mat)
    mod = Modification(z2_upt, z2_upt, np.eye(2))
    mod2 = pio.modification_from_json(pio.modification_to_json(mod))
    assert np.array_equal(mod.mat, mod2.mat)


def test_dumps_deterministic(z2_upt):
    a = pio.dumps(pio.upt_to_json(z2_upt))
    b = pio.dumps(pio.upt_to_json(z2_upt))
    assert a == b


def test_cli_check_group(tmp_path, z2, capsys):
    path = write(tmp_path, "g.json", z2.to_json())
    assert main(["check", path, "--kind", "group"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] == "pass"


def test_cli_check_monoid_pass_and_fail(tmp_path, capsys):
    good = write(tmp_path, "m.json", pio.monoid_to_json(trivial_monoid()))
    assert main(["check", good, "--kind", "frobenius"]) == 0
    capsys.readouterr()
    bad_payload = pio.monoid_to_json(pointwise_monoid(2))
    bad_payload["unit"]["entries"][0] = [2.0, 0.0]
    bad = write(tmp_path, "bad.json", bad_payload)
    assert main(["check", bad, "--kind", "frobenius"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] == "fail"


def test_cli_check_twisted_functor(tmp_path, klein_objs, capsys):
    from pivotfun.repg import klein_pauli_cocycle, twisted_fibre_functor
    f = twisted_fibre_functor(klein_objs, klein_pauli_cocycle(klein_objs))
    path = write(tmp_path, "tw.json", pio.functor_to_json(f))
    assert main(["check", path, "--kind", "functor"]) == 0
    capsys.readouterr()
    # corrupt one multiplicator: named witness, exit 1
    payload = pio.functor_to_json(f)
    payload["mult"]["1,2"]["entries"][0] = [3.0, 0.0]
    bad = write(tmp_path, "twbad.json", payload)
    assert main(["check", bad, "--kind", "functor"]) == 1
    out = json.loads(capsys.readouterr().out)
    failed = [c for c in out["checks"] if c["status"] == "fail"]
    assert failed


def test_cli_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert main(["check", str(p), "--kind", "group"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert "line" in out["error"]


def test_cli_construction_closure(tmp_path, z2_upt, capsys):
    src = write(tmp_path, "a.json", pio.upt_to_json(z2_upt))
    for cmd, kind in (("pants", "frobenius"), ("dual", "upt"), ("dagger", "upt")):
        out_path = str(tmp_path / f"out_{cmd}.json")
        assert main([cmd, src, "--out", out_path]) == 0
        capsys.readouterr()
        assert main(["check", out_path, "--kind", kind]) == 0
        capsys.readouterr()


def test_cli_dagger_twice_byte_stable(tmp_path, z2_upt, capsys):
    src = write(tmp_path, "a.json", pio.upt_to_json(z2_upt))
    once = str(tmp_path / "d1.json")
    twice = str(tmp_path / "d2.json")
    assert main(["dagger", src, "--out", once]) == 0
    assert main(["dagger", once, "--out", twice]) == 0
    capsys.readouterr()
    a0 = pio.upt_from_json(json.loads((tmp_path / "a.json").read_text()))
    a2 = pio.upt_from_json(json.loads((tmp_path / "d2.json").read_text()))
    assert a2.dim == a0.dim
    tolerance = 1e-9
    for i in range(len(a0.objects)):
        assert np.linalg.norm(a2.component(i) - a0.component(i)) <= tolerance


def test_cli_dual_of_identity_upt(tmp_path, z2_objs, capsys):
    from pivotfun.upt import identity_upt
    ident = identity_upt(canonical_fibre_functor(z2_objs))
    src = write(tmp_path, "id.json", pio.upt_to_json(ident))
    out_path = str(tmp_path / "id_dual.json")
    assert main(["dual", src, "--out", out_path]) == 0
    capsys.readouterr()
    d = pio.upt_from_json(json.loads((tmp_path / "id_dual.json").read_text()))
    assert upt_equal(d, ident)


def test_cli_morita_paths(tmp_path, z2, capsys):
    pants2 = pair_of_pants(standard_duality(fhilb(2)))
    triv = trivial_monoid()
    pw = pointwise_monoid(2)
    a = write(tmp_path, "pants.json", pio.monoid_to_json(pants2))
    b = write(tmp_path, "triv.json", pio.monoid_to_json(triv))
    c = write(tmp_path, "pw.json", pio.monoid_to_json(pw))
    m = write(tmp_path, "cols.json", pio.bimodule_to_json(column_bimodule(2)))
    n = write(tmp_path, "rows.json", pio.bimodule_to_json(row_bimodule(2)))
    assert main(["morita", a, b, "--witness", m, n]) == 0
    capsys.readouterr()
    assert main(["morita", c, b]) == 1
    capsys.readouterr()
    gp = pair_of_pants(standard_duality(ghilb(z2, [1, 1])))
    g = write(tmp_path, "gpants.json", pio.monoid_to_json(gp))
    assert main(["morita", g, g]) == 3
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] == "inconclusive"


def test_cli_roundtrip_and_corruption(tmp_path, z2, z2_objs, capsys):
    a1 = graded_upt(z2, [2, 1], z2_objs)
    a2 = graded_upt(z2, [1, 2], z2_objs)
    e = twist_upt(a2.target, 1)
    t = np.zeros((3, 3), dtype=complex)
    t[1, 0] = t[2, 1] = t[0, 2] = 1.0
    tau = Modification(a1, upt_compose(a2, e), t)
    p1 = write(tmp_path, "a1.json", pio.upt_to_json(a1))
    p2 = write(tmp_path, "a2.json", pio.upt_to_json(a2))
    pe = write(tmp_path, "e.json", pio.upt_to_json(e))
    pt = write(tmp_path, "tau.json", pio.modification_to_json(tau))
    assert main(["roundtrip", p1, p2, pe, pt]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["deviation"] <= 1e-8
    # perturb one tau entry by 1e-3: forward certification must fail
    payload = pio.modification_to_json(tau)
    payload["mat"]["entries"][0] = [1e-3, 0.0]
    ptbad = write(tmp_path, "taubad.json", payload)
    assert main(["roundtrip", p1, p2, pe, ptbad]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] == "fail"
    assert out.get("stage", "forward certification") == "forward certification" \
        or any(c["status"] == "fail" for c in out.get("checks", []))


def test_cli_classify_z2(tmp_path, z2, capsys):
    path = write(tmp_path, "g.json", z2.to_json())
    assert main(["classify-upt", path, "--max-dim", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["class_count"] == 2
    reps = sorted(tuple(c["representative"]) for c in out["classes"])
    assert reps == [(0, 1), (1, 0)]
    assert all(c["certificate"] == "pass" for c in out["classes"])
    # both dimension-1 classes sit in one twist orbit
    assert len({c["twist_orbit"] for c in out["classes"]}) == 1


def test_cli_classify_z2_dim2_has_matrix_class(tmp_path, z2, capsys):
    path = write(tmp_path, "g.json", z2.to_json())
    assert main(["classify-upt", path, "--max-dim", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    mix = [c for c in out["classes"] if c["representative"] == [1, 1]]
    assert len(mix) == 1
    assert mix[0]["pants_dim"] == 4
    assert mix[0]["center_dim"] == 1


def test_cli_classify_trivial_group(tmp_path, capsys):
    path = write(tmp_path, "g1.json", cyclic(1).to_json())
    assert main(["classify-upt", path, "--max-dim", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["class_count"] == 4
    dims = sorted(c["dimension"] for c in out["classes"])
    assert dims == [1, 2, 3, 4]


def test_cli_report_determinism(tmp_path, z2, capsys):
    path = write(tmp_path, "g.json", z2.to_json())
    main(["classify-upt", path, "--max-dim", "2"])
    first = capsys.readouterr().out
    main(["classify-upt", path, "--max-dim", "2"])
    second = capsys.readouterr().out
    assert first == second


def test_cli_env_tolerance(tmp_path, z2, capsys, monkeypatch):
    monkeypatch.setenv("PIVOTFUN_TOL", "1e-6")
    path = write(tmp_path, "g.json", z2.to_json())
    assert main(["check", path, "--kind", "group"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tolerance"] == 1e-6
