import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kreinstring.continued import Form, krein_fraction
from kreinstring.evaluate import char_function
from kreinstring.strings import DiscreteString, eval_mass
from kreinstring.transforms import dual, flip_form, remove_zero_atom

Z_GRID = (-0.5, -1.0, -2.0, -5.0)


@st.composite
def strings(draw, allow_terminal=True, require_mass=False):
    k = draw(st.integers(min_value=2 if require_mass else 1, max_value=6))
    gaps = draw(st.lists(st.floats(0.01, 3.0), min_size=k, max_size=k))
    xs = [0.0] + np.cumsum(gaps).tolist()[:-1]
    inc = draw(st.lists(st.floats(0.01, 3.0), min_size=k, max_size=k))
    ys = np.cumsum(inc).tolist()
    if not require_mass and draw(st.booleans()):
        ys = [y - ys[0] for y in ys]  # massless origin record
        if k == 1:
            xs, ys = [0.0], [0.0]
    terminal = None
    if allow_terminal and draw(st.booleans()):
        terminal = xs[-1] + draw(st.floats(0.01, 2.0))
    if terminal is None and ys[-1] == 0.0:
        ys[-1] = 1.0  # keep a characteristic function defined
    return DiscreteString(tuple(zip(xs, ys)), terminal)


class TestDual:
    def test_hand_example(self):
        # single atom m at the origin <-> massless string of length m
        s = DiscreteString(((0.0, 0.5),))
        d = dual(s)
        assert d.jumps == ((0.0, 0.0),)
        assert d.terminal == 0.5

    def test_plateaus_swap_roles(self):
        s = DiscreteString(((0.0, 0.0), (1.0, 2.0), (3.0, 2.5)))
        d = dual(s)
        assert d.jumps == ((0.0, 1.0), (2.0, 3.0))
        assert d.terminal == 2.5

    def test_terminal_becomes_final_plateau(self):
        s = DiscreteString(((0.0, 0.0), (1.0, 2.0)), terminal=4.0)
        d = dual(s)
        assert d.jumps == ((0.0, 1.0), (2.0, 4.0))
        assert d.terminal is None

    @given(strings())
    def test_involution_is_exact(self, s):
        assert dual(dual(s)) == s

    @given(strings())
    def test_inverse_function_relation(self, s):
        d = dual(s)
        for q in (0.2, 0.7, 1.9, 3.3):
            # M*(q) = inf{t : M(t) > q}; check the defining inequality
            t = eval_mass(d, q)
            if np.isfinite(t):
                assert eval_mass(s, t) >= q or np.isclose(eval_mass(s, t), q)

    @given(strings())
    def test_characteristic_function_identity(self, s):
        for z in Z_GRID:
            w = char_function(s, z)
            w_dual = char_function(dual(s), z)
            assert w_dual == pytest.approx(1.0 / (-z * w), rel=1e-10)


class TestRemoveZeroAtom:
    @given(strings(allow_terminal=False, require_mass=True))
    def test_characteristic_function_identity(self, s):
        hat = remove_zero_atom(s)
        m_tot = s.jumps[-1][1]
        for z in Z_GRID:
            want = char_function(s, z) + 1.0 / (m_tot * z)
            got = char_function(hat, z)
            assert got == pytest.approx(want, rel=1e-10)

    def test_result_has_terminal(self):
        s = DiscreteString(((0.0, 0.0), (1.0, 1.0), (2.0, 3.0)))
        hat = remove_zero_atom(s)
        assert hat.terminal is not None

    def test_rejects_infinite_mass(self):
        with pytest.raises(ValueError, match="infinite"):
            remove_zero_atom(DiscreteString(((0.0, 1.0),), terminal=2.0))

    def test_rejects_no_mass(self):
        with pytest.raises(ValueError, match="no mass"):
            remove_zero_atom(DiscreteString(((0.0, 0.0),)))

    def test_rejects_single_origin_atom(self):
        with pytest.raises(ValueError, match="degenerates"):
            remove_zero_atom(DiscreteString(((0.0, 2.0),)))


def test_flip_form_is_involutive():
    cf = krein_fraction([1.0, 2.0], terminated=True)
    flipped = flip_form(cf)
    assert flipped.form is Form.STIELTJES
    assert flipped.coefficients == cf.coefficients
    assert flipped.terminated is True
    assert flip_form(flipped) == cf
