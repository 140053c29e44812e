import pytest

from vlekit.activity import ActivityCurve, IdealModel, activity_curve, ln_gamma
from vlekit.activity.nrtl import NrtlModel, NrtlParameterSet
from vlekit.errors import AlphaOutOfRange, VlekitError


@pytest.fixture(scope="module")
def model():
    return NrtlModel(NrtlParameterSet.three_parameter(0.5, 0.8, 0.3))


def test_grid_has_101_points(model):
    curve = activity_curve(model, 400.0)
    assert len(curve) == 101
    assert curve.x1[0] == 0.0
    assert curve.x1[-1] == 1.0
    assert curve.x1[50] == 0.5


def test_grid_spacing_exact(model):
    curve = activity_curve(model, 400.0)
    # nodes are i/100, so the midpoints come out bit-exact
    assert curve.x1[25] == 0.25
    assert all(b > a for a, b in zip(curve.x1, curve.x1[1:]))


def test_endpoints_normalized(model):
    curve = activity_curve(model, 400.0)
    assert curve.ln_gamma1[-1] == 0.0
    assert curve.ln_gamma2[0] == 0.0


def test_curve_matches_direct_calls(model):
    curve = activity_curve(model, 400.0)
    for i in (0, 13, 50, 92, 100):
        g1, g2 = model.ln_gamma(curve.x1[i], 400.0)
        assert curve.ln_gamma1[i] == g1
        assert curve.ln_gamma2[i] == g2


def test_coarser_grid(model):
    curve = activity_curve(model, 400.0, dx=0.05)
    assert len(curve) == 21


def test_bad_dx_rejected(model):
    with pytest.raises(ValueError):
        activity_curve(model, 400.0, dx=0.03)
    with pytest.raises(ValueError):
        activity_curve(model, 400.0, dx=0.0)


def test_ideal_model_is_zero_everywhere():
    curve = activity_curve(IdealModel(), 350.0)
    assert set(curve.ln_gamma1) == {0.0}
    assert set(curve.ln_gamma2) == {0.0}
    assert curve.model_name == "ideal"


def test_ln_gamma_free_function(model):
    assert ln_gamma(model, 0.3, 400.0) == model.ln_gamma(0.3, 400.0)


def test_model_error_annotated_with_composition():
    bad = NrtlModel(NrtlParameterSet.three_parameter(0.5, 0.8, 0.0))
    with pytest.raises(AlphaOutOfRange) as e:
        activity_curve(bad, 400.0)
    assert "x1" in str(e.value)


def test_curve_validation_grid_span():
    with pytest.raises(ValueError):
        ActivityCurve(
            T=300.0, x1=(0.0, 0.5), ln_gamma1=(1.0, 0.5), ln_gamma2=(0.0, 0.1),
            model_name="x",
        )


def test_curve_validation_monotone_grid():
    with pytest.raises(ValueError):
        ActivityCurve(
            T=300.0, x1=(0.0, 0.6, 0.5, 1.0),
            ln_gamma1=(1.0, 0.5, 0.4, 0.0), ln_gamma2=(0.0, 0.1, 0.2, 1.0),
            model_name="x",
        )


def test_curve_validation_endpoint_normalization():
    with pytest.raises(ValueError):
        ActivityCurve(
            T=300.0, x1=(0.0, 1.0), ln_gamma1=(1.0, 0.5), ln_gamma2=(0.0, 1.0),
            model_name="x",
        )
    with pytest.raises(ValueError):
        ActivityCurve(
            T=300.0, x1=(0.0, 1.0), ln_gamma1=(1.0, 0.0), ln_gamma2=(0.3, 1.0),
            model_name="x",
        )


def test_curve_validation_length_mismatch():
    with pytest.raises(ValueError):
        ActivityCurve(
            T=300.0, x1=(0.0, 0.5, 1.0), ln_gamma1=(1.0, 0.0), ln_gamma2=(0.0, 1.0),
            model_name="x",
        )


def test_tiny_endpoint_noise_tolerated():
    # values inside the 1e-10 normalization band are accepted as-is
    c = ActivityCurve(
        T=300.0, x1=(0.0, 1.0), ln_gamma1=(1.0, 5e-11), ln_gamma2=(-5e-11, 1.0),
        model_name="x",
    )
    assert c.ln_gamma1[-1] == 5e-11
