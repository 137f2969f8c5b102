import pytest

import tmjs.polynomials as polynomials
from tmjs.verify import LEVELS, check_bilinear, closed_vs_oracle, random_configs, verify_suite


def test_quick_suite_passes():
    report = verify_suite("quick")
    assert report.passed, report.format()
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))
    assert "polynomial-table" in names and "wei-norman-residual" in names


def test_full_suite_adds_refinement():
    report = verify_suite("full")
    assert report.passed, report.format()
    assert "wei-norman-refinement" in [c.name for c in report.checks]


def test_unknown_level():
    with pytest.raises(ValueError):
        verify_suite("thorough")
    assert set(LEVELS) == {"quick", "full"}


def test_report_lines_show_deviation():
    text = verify_suite("quick").format()
    assert "deviation=" in text and text.splitlines()[-1].endswith("(quick)")


def test_perturbed_polynomial_is_caught(monkeypatch):
    original = polynomials._inner_coefficients

    def broken(k):
        coeffs = list(original(k))
        if k == 2:
            coeffs[1] += 1
        return tuple(coeffs)

    monkeypatch.setattr(polynomials, "_inner_coefficients", broken)
    report = verify_suite("quick")
    assert not report.passed
    assert "polynomial-table" in report.failures


def test_random_configs_are_seeded():
    a, b = random_configs(5, seed=9), random_configs(5, seed=9)
    assert a == b
    for cfg in a:
        assert cfg.xi.r <= 1.0 and cfg.zeta.r <= 1.0
        assert cfg.chi**2 + cfg.eta**2 == pytest.approx(1.0)


def test_bilinear_check_on_fresh_seed():
    assert check_bilinear(random_configs(10, seed=77)) < 1e-6
    assert closed_vs_oracle(random_configs(1, seed=5)[0]) < 1e-6
