import json
import random
from fractions import Fraction

import pytest

from vertex_identities.verify import (
    REGISTRY,
    list_identities,
    reports_to_csv,
    reports_to_json,
    verify_identity,
    verify_pfaffian_cauchy_binet,
)
from vertex_identities.verify import identities as ids
from vertex_identities.verify.engine import canonical, resolve_params

F = Fraction


def test_registry_listing():
    listing = {i: eq for i, eq, _, _ in list_identities()}
    assert listing["thm1"] == "s-cauchy-refine"
    assert listing["conj2prime"] == "osasm-conj-pdwpf"
    assert len(listing) >= 24
    assert [i for i, *_ in list_identities()] == list(REGISTRY)


@pytest.mark.parametrize("identity_id", list(REGISTRY))
def test_every_identity_passes_at_defaults(identity_id):
    report = verify_identity(identity_id, seed=3)
    assert report.status == "pass", report.first_mismatch
    assert report.samples


def test_spec_examples():
    assert verify_identity("thm1", n=2, D=6, samples=3).passed
    assert verify_identity("cauchy-det", n=3).passed
    assert verify_identity("thm1", n=2, D=6, t=0).passed


@pytest.mark.parametrize("identity_id,kw", [
    ("thm1", {"n": 3}), ("thm2", {"n": 3}), ("thm3", {"n": 1}), ("thm4", {"n": 1}),
    ("conj1", {"n": 1}), ("conj2", {"n": 1}), ("conj2prime", {"n": 1}),
    ("knw-pdwpf", {"m": 2, "n": 3, "D": 5}), ("conj1prime", {"m": 2, "n": 3, "D": 4}),
    ("ktilde-cauchy", {"m": 2}), ("pp-ASM-gs", {"n": 1}),
])
def test_other_sizes(identity_id, kw):
    assert verify_identity(identity_id, seed=11, **kw).passed


def test_reports_are_reproducible():
    a = verify_identity("conj1", seed=5)
    b = verify_identity("conj1", seed=5)
    assert (a.lhs_digest, a.rhs_digest, a.samples) == (b.lhs_digest, b.rhs_digest, b.samples)
    c = verify_identity("conj1", seed=6)
    assert c.samples != a.samples
    config = {"seed": 5}
    assert reports_to_json([a], config) == reports_to_json([b], config)
    assert "elapsedMs" not in reports_to_json([a], config)
    assert "elapsedMs" in reports_to_json([a], config, timing=True)


def test_json_and_csv_shape():
    r = verify_identity("cauchy-det", n=2, seed=1)
    doc = json.loads(reports_to_json([r], {"seed": 1}))
    assert doc["schemaVersion"] == 1
    rep = doc["reports"][0]
    assert {"id", "params", "seed", "mode", "status"} <= set(rep)
    assert "firstMismatch" not in rep
    lines = reports_to_csv([r]).splitlines()
    assert lines[0].startswith("id,") and len(lines) == 2


def test_rationals_are_exact_literals():
    r = verify_identity("hl-cauch2", t=F(2, 7), seed=0)
    assert r.params["t"] == "2/7"
    assert "." not in json.dumps(r.samples)
    assert canonical(F(-3, 6)) == "-1/2"


def test_guards():
    with pytest.raises(ValueError):
        resolve_params(REGISTRY["conj2"], {"n": 9})
    with pytest.raises(ValueError):
        resolve_params(REGISTRY["thm1"], {"D": 40})
    with pytest.raises(ValueError):
        resolve_params(REGISTRY["knw-pdwpf"], {"m": 3, "n": 2})
    with pytest.raises(KeyError):
        verify_identity("no-such-identity")


def test_degenerate_parameters_are_reported():
    # the group-sum formula for P_lam is 0/0 at t = -1
    r = verify_identity("thm2", t=-1)
    assert r.status == "skipped-degenerate"
    assert r.note


# -- negative controls: a wrong coefficient must be caught ---------------------------------


def test_wrong_even_column_coefficient_fails(monkeypatch):
    real = ids.even_column_coeff
    monkeypatch.setattr(ids, "even_column_coeff", lambda lam, t, n=0: real(lam, t, n) * (1 + t ** 7))
    assert verify_identity("conj2", n=2, D=6).status == "fail"


def test_wrong_b_coefficient_fails(monkeypatch):
    real = ids.b_coeff
    monkeypatch.setattr(ids, "b_coeff", lambda lam, t, n=0: real(lam, t, n + 1 if n else 0))
    r = verify_identity("thm2", n=2, D=6)
    assert r.status == "fail"
    assert r.first_mismatch is not None


# -- t = 0 degenerations ------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_refined_cauchy_at_t_zero(n):
    C = 6 + n * (n - 1) // 2
    y = [F(1, 2), F(-2, 3), F(3, 5)][:n]
    vdm = ids.vandermonde_series(n, C)
    assert ids._rhs_thm1(n, y, F(0), C) == vdm * ids._rhs_cauchy(n, y, C)
    assert ids._rhs_izergin(n, y, F(0), C) == vdm * ids._rhs_cauchy(n, y, C)


@pytest.mark.parametrize("n", [1, 2])
def test_refined_symplectic_cauchy_at_t_zero(n):
    C = 6 + n * (n - 1) // 2
    y = [F(2), F(-3, 5)][:n]
    assert ids._rhs_thm3(n, y, F(0), C) == ids.vandermonde_series(n, C) * ids._rhs_symp_cauchy(n, y, C)


@pytest.mark.parametrize("n", [1, 2])
def test_refined_littlewood_at_t_zero(n):
    N = 2 * n
    C = 6 + N * (N - 1) // 2
    little = ids.vandermonde_series(N, C) * ids._rhs_littlewood(N, C, F(0), None)
    assert ids._rhs_thm4(N, F(0), C) == little
    assert ids._rhs_kuperberg(N, F(0), C) == little


def test_t_zero_lhs_is_classical():
    r1 = verify_identity("thm1", n=2, t=0, seed=2)
    assert r1.passed and r1.params["t"] == "0"
    assert verify_identity("thm3", n=2, t=0, seed=2).passed
    assert verify_identity("thm4", n=2, t=0, seed=2).passed
    assert verify_identity("conj2", n=2, t=0, seed=2).passed


# -- Pfaffian Cauchy-Binet -------------------------------------------------------------------


@pytest.mark.parametrize("m,M", [(2, 2), (2, 4), (4, 6)])
def test_cauchy_binet_analogue(m, M):
    for seed in range(3):
        assert verify_pfaffian_cauchy_binet(m, M, seed).passed


def test_cauchy_binet_single_subset():
    out = ids._b_cb({"m": 2, "M": 2}, random.Random(0), False)
    A = [[F(v) for v in row] for row in out.sample["A"]]
    T = [[F(v) for v in row] for row in out.sample["T"]]
    assert out.lhs == out.rhs == A[0][1] * (T[0][0] * T[1][1] - T[0][1] * T[1][0])


def test_cauchy_binet_rejects_odd():
    with pytest.raises(ValueError):
        verify_pfaffian_cauchy_binet(3, 4)
