import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import xstates
from superdiscord import DomainError, bloch_from_density, entropic_E, entropy4, maximally_mixed, mutual_information, spectrum
from superdiscord.entropy import joint_entropy_closed_form, mutual_information_closed_form, xlog2x


def _vn_entropy(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-15]
    return float(-(w * np.log2(w)).sum())


def test_E_endpoints():
    assert entropic_E(0.0) == 1.0
    assert entropic_E(1.0) == pytest.approx(0.0, abs=1e-15)
    assert entropic_E(-1.0) == pytest.approx(0.0, abs=1e-15)


def test_E_half_against_mpmath():
    y = mpmath.mpf("0.5")
    ref = 1 - (1 + y) / 2 * mpmath.log(1 + y, 2) - (1 - y) / 2 * mpmath.log(1 - y, 2)
    assert entropic_E(0.5) == pytest.approx(float(ref), abs=1e-15)


@given(st.floats(min_value=-1.0, max_value=1.0))
def test_E_is_even_and_bounded(y):
    e = entropic_E(y)
    assert 0.0 <= e <= 1.0 + 1e-15
    assert e == pytest.approx(entropic_E(-y), abs=1e-15)


@given(st.floats(min_value=0.0, max_value=0.999), st.floats(min_value=1e-4, max_value=1e-3))
def test_E_decreases_in_magnitude(y, dy):
    assert entropic_E(min(y + dy, 1.0)) < entropic_E(y)


def test_E_vectorised():
    ys = np.linspace(-1, 1, 11)
    assert np.allclose(entropic_E(ys), [entropic_E(float(v)) for v in ys])


def test_E_domain():
    with pytest.raises(DomainError):
        entropic_E(1.01)
    with pytest.raises(DomainError):
        entropic_E(float("nan"))
    # just past 1 by rounding is tolerated
    assert entropic_E(1.0 + 1e-12) == pytest.approx(0.0, abs=1e-12)


def test_xlog2x_at_zero():
    assert xlog2x(0.0) == 0.0
    assert xlog2x(2.0) == pytest.approx(2.0)


@given(xstates)
def test_entropy4_matches_eigvalsh(dm):
    assert entropy4(spectrum(bloch_from_density(dm))) == pytest.approx(_vn_entropy(dm.matrix()), abs=1e-10)


@given(xstates)
def test_joint_entropy_closed_form(dm):
    assert joint_entropy_closed_form(bloch_from_density(dm)) == pytest.approx(
        _vn_entropy(dm.matrix()), abs=1e-10
    )


@given(xstates)
def test_mutual_information_routes_and_sign(dm):
    p = bloch_from_density(dm)
    m = mutual_information(p)
    assert m.I == pytest.approx(mutual_information_closed_form(p), abs=1e-9)
    assert m.I >= -1e-12
    assert m.S_A + m.S_B - m.S_AB == pytest.approx(m.I)


def test_mixed_state_has_no_correlation():
    m = mutual_information(bloch_from_density(maximally_mixed()))
    assert (m.S_A, m.S_B, m.S_AB) == (1.0, 1.0, pytest.approx(2.0))
    assert m.I == pytest.approx(0.0, abs=1e-15)


def test_singlet_mutual_information_is_two():
    from superdiscord import werner

    assert mutual_information(bloch_from_density(werner(1.0))).I == pytest.approx(2.0)
