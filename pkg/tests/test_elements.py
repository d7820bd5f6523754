import pytest
from hypothesis import given

from cactusops import (
    Element,
    NotHomogeneousError,
    Surjection,
    boundary_basis,
    white_op,
)

from conftest import elements


def S(*values):
    return Surjection(values)


def E(*values):
    return Element.single(Surjection(values))


class TestArithmetic:
    def test_add_symmetrized_product(self):
        total = E(1, 2) + E(2, 1)
        assert total.terms() == [(S(1, 2), 1), (S(2, 1), 1)]

    def test_add_cancellation(self):
        x = E(1, 2, 1)
        assert not (x + x.scale(-1))
        assert x + x.scale(-1) == Element.zero()

    def test_add_associator(self):
        left = E(2, 1, 3) + E(3, 1, 2)
        right = E(1, 3, 2).scale(-1) + E(2, 3, 1).scale(-1)
        total = left + right
        assert total.terms() == [
            (S(1, 3, 2), -1),
            (S(2, 1, 3), 1),
            (S(2, 3, 1), -1),
            (S(3, 1, 2), 1),
        ]

    def test_scale(self):
        assert E(2, 1, 3, 1).scale(-1).coefficient(S(2, 1, 3, 1)) == -1
        assert E(1, 2).scale(0) == Element.zero()
        assert (2 * E(1, 2)).coefficient(S(1, 2)) == 2

    def test_operators(self):
        x, y = E(1, 2), E(2, 1)
        assert x - y == x + (-y)
        assert -(-x) == x

    @given(elements(), elements(), elements())
    def test_add_associative_commutative(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)

    @given(elements())
    def test_scale_distributes(self, a):
        assert a.scale(2) == a + a
        assert a.scale(-3) + a.scale(3) == Element.zero()

    @given(elements(), elements())
    def test_string_form_determines_equality(self, a, b):
        assert (str(a) == str(b)) == (a == b)


class TestHomogeneity:
    def test_zero_has_no_bidegree(self):
        assert Element.zero().bidegree() is None

    def test_homogeneous(self):
        assert (E(1, 2) + E(2, 1)).bidegree() == (2, 0)

    def test_mixed_rejected(self):
        with pytest.raises(NotHomogeneousError):
            (E(1, 2) + E(1, 2, 1)).bidegree()


class TestApplyLinear:
    def test_boundary_of_121(self):
        out = E(1, 2, 1).apply_linear(boundary_basis)
        assert out == E(2, 1) - E(1, 2)

    @given(elements())
    def test_identity(self, a):
        assert a.apply_linear(Element.single) == a

    def test_white_op_linear_example(self):
        # The (2,1) term contributes nothing: no position precedes its top value.
        assert white_op(E(1, 2) + E(2, 1)) == E(1, 3, 1, 2)

    def test_errors_tagged_with_term(self):
        def explode(u):
            raise ValueError("boom")

        with pytest.raises(ValueError, match=r"boom \[at basis term \(1,2\)\]"):
            E(1, 2).apply_linear(explode)
