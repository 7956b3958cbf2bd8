import math

import pytest

import orlapprox as oa


def test_golden_ratio_norm():
    fam = oa.OrliczFamily.power_per_index(1, [2.0, 1.0, 2.0], [1.0, 1.0, 1.0])
    spec = oa.Spectrum(1, [0, 1, 1])
    assert oa.luxemburg_norm(fam, spec) == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-9)


def test_lp_identities():
    spec = oa.Spectrum(2)
    spec[1] = 3
    spec[2] = 4
    assert oa.orlicz_norm(oa.OrliczFamily.scaled_power(2, 2.0), spec) == pytest.approx(5.0, rel=1e-9)
    assert oa.norm(oa.OrliczFamily.power(2, 1.0), spec, oa.NormKind.orlicz) == pytest.approx(7.0, rel=1e-9)


def test_best_approx_geometric():
    spec = oa.Spectrum.from_rule("geometric", {"ratio": [0.5]}, 60)
    fam = oa.OrliczFamily.power(60, 2.0)
    assert oa.best_approx(fam, spec, 1, oa.NormKind.luxemburg) == pytest.approx(math.sqrt(2 / 3), rel=1e-9)
    seq = oa.best_approx_sequence(fam, spec, 1, 5, oa.NormKind.luxemburg)
    assert [n for n, _ in seq] == [1, 2, 3, 4, 5]


def test_modulus_single_frequency():
    spec = oa.Spectrum(4)
    spec[1] = 1
    r = oa.modulus(spec, oa.Multiplier.classical(1.0), math.pi, oa.OrliczFamily.power(4, 2.0), oa.NormKind.luxemburg)
    assert r["value"] == pytest.approx(2.0, rel=1e-9)


def test_sharp_constant():
    r = oa.sharp_constant(oa.Multiplier.classical(1.0), 2.0, 2, math.pi, j_max=64)
    assert r["C"] == pytest.approx(1 / math.sqrt(2), rel=1e-2)
    assert sum(r["rho"]) == pytest.approx(1.0)


def test_errors_map_to_python():
    spec = oa.Spectrum(2)
    with pytest.raises(oa.DomainError):
        oa.best_approx(oa.OrliczFamily.power(2, 2.0), spec, 9, oa.NormKind.orlicz)
    with pytest.raises(oa.ConfigError):
        oa.Spectrum.from_rule("gaussian", {}, 3)


def test_criterion():
    r = oa.run_criterion(2)
    assert r["pass"]
