import pickle

import pytest
from hypothesis import given, strategies as st

from tropicount.floors import GermKind
from tropicount.multiplicity import (GermContext, Multiplicity, UNDETERMINED, is_known,
                                     complex_mult, real_mult, combine, parallelogram_data,
                                     parallelogram_real, vainsencher_degree, SignVector,
                                     UndefinedMultiplicity)

G = GermKind


def test_complex_values():
    assert complex_mult(G.PARALLELOGRAM, GermContext(2)) == 2
    assert complex_mult(G.HORIZONTAL_W2, GermContext(2)) == 6
    assert complex_mult(G.HORIZONTAL_W2, GermContext(3)) == 8
    assert complex_mult(G.DIAGONAL_W2, GermContext(3)) == 4
    assert complex_mult(G.DIAGONAL_W2, GermContext(3, consumed=1)) == 2
    assert complex_mult(G.DIAGONAL_W2, GermContext(2)) == 2
    assert complex_mult(G.LEFT_STRING, GermContext(2, target_kind="edge", target_ks=(1,))) == 2
    assert complex_mult(G.RIGHT_STRING, GermContext(3, target_kind="vertex")) == 1
    assert complex_mult(G.TWO_DIM_STRING,
                        GermContext(2, target_kind="edge", target_ks=(0, 1))) == 4


@pytest.mark.parametrize("kind,ctx", [
    (G.VERTICAL_W2, GermContext(2)),
    (G.WEIGHT_THREE, GermContext(3)),
    (G.UPWARD_STRING, GermContext(2)),
    (G.LEFT_STRING, GermContext(2)),
    (G.DIAGONAL_W2, GermContext(1)),
    (G.DIAGONAL_W2, GermContext(2, consumed=2)),
    (G.TWO_DIM_STRING, GermContext(2, target_kind="edge", target_ks=(1,))),
])
def test_inadmissible(kind, ctx):
    with pytest.raises(UndefinedMultiplicity):
        complex_mult(kind, ctx)
    with pytest.raises(UndefinedMultiplicity):
        real_mult(kind, ctx)


def test_real_values():
    assert real_mult(G.DIAGONAL_W2, GermContext(3)) == 4
    assert real_mult(G.LEFT_STRING, GermContext(2, target_kind="edge", target_ks=(0,))) == 2
    assert real_mult(G.LEFT_STRING, GermContext(2, target_kind="edge", target_ks=(1,))) == 0
    assert real_mult(G.LEFT_STRING, GermContext(3, target_kind="vertex")) == 1
    assert real_mult(G.RIGHT_STRING, GermContext(3, target_kind="edge", target_ks=(1,))) \
        is UNDETERMINED
    assert real_mult(G.HORIZONTAL_W2, GermContext(2)) is UNDETERMINED
    assert real_mult(G.TWO_DIM_STRING,
                     GermContext(2, target_kind="edge", target_ks=(0, 2))) == 4
    assert real_mult(G.TWO_DIM_STRING,
                     GermContext(2, target_kind="edge", target_ks=(0, 1))) == 0


def test_parallelogram_data():
    assert parallelogram_data(((0, 1), (0, 2), (1, 1), (1, 0)), 2) == (1, 1, 1)
    assert parallelogram_data(((0, 0), (1, 0), (1, 1), (0, 1)), 2) == (1, 1, 0)
    # a parallelogram fitting neither variant
    assert parallelogram_data(((0, 1), (1, 0), (2, 0), (1, 1)), 2) is None
    assert parallelogram_real(None, 2, None, None) is UNDETERMINED


def _parity_oracle(variant, i, k, l):
    # count of integer points on the sign-change side, by direct summation
    if variant == 1:
        s = sum(3 * i + 2 + 2 * k + 2 * l for _ in range(i - 1))
    else:
        s = sum(i + 2 + 2 * l for _ in range(i - 1))
    assert s % 2 == 0
    return 2 if (s // 2) % 2 else 0


@given(st.sampled_from([1, 2]), st.integers(1, 3), st.integers(0, 3), st.integers(0, 3))
def test_parallelogram_real_in_zero_two(variant, i, k, l):
    r = parallelogram_real(variant, i, k, l)
    assert r in (0, 2)
    assert r == _parity_oracle(variant, i, k, l)
    ctx = GermContext(i, k=k, l=l, variant=variant)
    assert real_mult(G.PARALLELOGRAM, ctx) <= complex_mult(G.PARALLELOGRAM, ctx)


known = st.one_of(st.integers(0, 8), st.just(UNDETERMINED))


@given(st.lists(st.tuples(st.integers(1, 8), known), min_size=1, max_size=3))
def test_combine_rules(factors):
    factors = [(c, r if not is_known(r) else min(r, c)) for c, r in factors]
    m = combine(factors)
    reals = [r for _, r in factors]
    if any(is_known(r) and r == 0 for r in reals):
        assert m.real == 0
    elif all(is_known(r) for r in reals):
        assert m.real <= m.complex
    else:
        assert m.real is UNDETERMINED
        assert m.real_bound == 0


def test_multiplicity_validates():
    with pytest.raises(ValueError):
        Multiplicity(2, 4)
    assert Multiplicity(2).real_bound == 0
    assert Multiplicity(4, 2).to_json() == {"complex": 4, "real": 2}


def test_undetermined_is_singleton():
    assert pickle.loads(pickle.dumps(UNDETERMINED)) is UNDETERMINED
    assert str(UNDETERMINED) == "undet."


def test_sign_vector():
    SignVector("++")
    with pytest.raises(ValueError):
        SignVector("+-")


def test_context_rejects_negative_consumed():
    with pytest.raises(ValueError):
        GermContext(3, consumed=-1)


def test_vainsencher():
    assert vainsencher_degree(3) == 280
    assert vainsencher_degree(4) == 4860
    with pytest.raises(ValueError):
        vainsencher_degree(2)
