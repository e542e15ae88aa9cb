"""Exponent bound verdicts, the orbit trace bound, Siegel's bound, and
extremal classification."""

from fractions import Fraction

import pytest

from mdtk.cyclo import rational, root_of_unity
from mdtk.construct import (
    MetricGroup,
    deligne_product,
    double_abelian,
    fibonacci,
    ising,
    pointed,
    so5_level9,
)
from mdtk.bounds import (
    bound_check,
    extremal_classify,
    key_object,
    lemma_orbit_bound,
    prime_power,
    siegel_check,
)
from mdtk.modular import NotModularError


def cyclic_pointed(n, name=None):
    return pointed(MetricGroup.generator_form((n,), (1,)), name=name)


def sqrt2():
    return root_of_unity(8) + root_of_unity(8, 7)


def golden():
    return rational(1) + root_of_unity(5) + root_of_unity(5, 4)


# ---------------------------------------------------------- prime_power


def test_prime_power():
    assert prime_power(16) == 2
    assert prime_power(27) == 3
    assert prime_power(7) == 7
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert prime_power(2) == 2


# ----------------------------------------------------------- bound_check


def test_bound_check_ising():
    v = bound_check(ising(1, 1), classify=True)
    assert (v.fsexp, v.ndim, v.prime) == (16, 4, 2)
    assert v.bound_holds
    assert v.extremal
    assert v.tier == 4
    assert v.extremal_class == "ising-x-pointed(1)"
    assert "16 <= 16" in str(v)


def test_bound_check_fibonacci():
    v = bound_check(fibonacci(1), classify=True)
    assert (v.fsexp, v.ndim, v.prime) == (5, 5, 5)
    assert v.bound_holds and v.extremal and v.tier == 1
    assert v.extremal_class == "fibonacci"


def test_bound_check_so5():
    v = bound_check(so5_level9(1), classify=True)
    assert (v.fsexp, v.ndim, v.prime) == (9, 9, 3)
    assert v.bound_holds and v.extremal and v.tier == 1
    assert v.extremal_class == "unclassified"


def test_bound_check_pointed():
    v = bound_check(cyclic_pointed(5, "pointed-c5"), classify=True)
    assert (v.fsexp, v.ndim, v.prime) == (5, 5, 5)
    assert v.extremal and v.tier == 1
    assert v.extremal_class == "pointed-cyclic"


def test_bound_check_non_extremal():
    v = bound_check(double_abelian((2,)), classify=True)
    assert (v.fsexp, v.ndim, v.prime) == (2, 4, 2)
    assert v.bound_holds
    assert not v.extremal
    assert v.tier is None
    assert "2 <= 16" in str(v)


def test_bound_check_product():
    v = bound_check(deligne_product(ising(1, 1), ising(1, 1)), classify=True)
    assert (v.fsexp, v.ndim) == (16, 16)
    assert v.bound_holds and v.extremal and v.tier == 1
    assert v.extremal_class == "ising-x-ising"


def test_bound_check_vacuous_off_prime_powers():
    p = deligne_product(ising(1, 1), fibonacci(1))  # T order 80
    v = bound_check(p)
    assert v.prime is None
    assert v.bound_holds
    assert "bound vacuous" in str(v)


# ----------------------------------------------------- lemma_orbit_bound


def test_lemma_skips_irrational_dim():
    v = lemma_orbit_bound(fibonacci(1), "tau")
    assert not v.applicable
    assert "rational integer" in v.note


def test_lemma_ising_sigma():
    v = lemma_orbit_bound(ising(1, 1), "sigma")
    assert v.applicable
    assert v.degree == 1
    assert v.m_value == Fraction(2)
    assert v.orbit_labels == ("sigma",)
    assert v.holds


def test_lemma_ising_unit_fails():
    # the twist of the unit has order 16 and the squared Galois orbit is
    # a fixed point, so the stated bound does not hold there; the sweep
    # only quantifies over data with all dimensions integral, which the
    # sqrt 2 object rules out here
    v = lemma_orbit_bound(ising(1, 1), "1")
    assert v.applicable
    assert v.degree == 2
    assert v.m_value == Fraction(1)
    assert not v.holds


def test_lemma_pointed_entries():
    c3 = cyclic_pointed(3, "pointed-c3")
    for lab in c3.labels:
        v = lemma_orbit_bound(c3, lab)
        assert v.applicable and v.holds, (lab, v)
    v = lemma_orbit_bound(c3, "g1")
    assert v.degree == 1 and v.orbit_labels == ("g1",)
    c7 = cyclic_pointed(7, "pointed-c7")
    v = lemma_orbit_bound(c7, "g1")
    assert v.applicable and v.holds
    assert v.degree == 3
    assert v.orbit_labels == ("g1", "g2", "g4")
    c5 = cyclic_pointed(5, "pointed-c5")
    v = lemma_orbit_bound(c5, "g1")
    assert v.degree == 2 and v.holds
    assert v.orbit_labels == ("g1", "g4")


def test_lemma_doubles():
    for orders in ((2,), (3,)):
        md = double_abelian(orders)
        for lab in md.labels:
            v = lemma_orbit_bound(md, lab)
            assert v.applicable and v.holds, (md.name, lab)


# ------------------------------------------------------------ key_object


def test_key_object():
    assert key_object(ising(1, 1)) == "1"
    assert key_object(fibonacci(1)) == "1"
    assert key_object(so5_level9(1)) == "1"
    assert key_object(cyclic_pointed(5)) == "g1"
    assert key_object(double_abelian((2,))) == "g(1,1)"


def test_key_object_needs_prime_power():
    with pytest.raises(NotModularError):
        key_object(deligne_product(ising(1, 1), fibonacci(1)))


# ---------------------------------------------------------- siegel_check


def test_siegel_check():
    assert siegel_check(rational(1))
    assert siegel_check(rational(2))
    assert siegel_check(rational(2) + sqrt2())
    g = golden()
    assert siegel_check(g * g)  # trace 3 at degree 2, equality


def test_siegel_check_rejections():
    with pytest.raises(ValueError):
        siegel_check(sqrt2())  # not totally positive
    with pytest.raises(ValueError):
        siegel_check(golden())  # conjugate is negative
    with pytest.raises(ValueError):
        siegel_check(rational(Fraction(1, 2)))  # not an algebraic integer
    with pytest.raises(ValueError):
        siegel_check(root_of_unity(5))  # not totally real


# ------------------------------------------------------------- classify


def test_extremal_classify_direct():
    assert extremal_classify(cyclic_pointed(7)) == "pointed-cyclic"
    assert extremal_classify(fibonacci(3)) == "fibonacci"
    assert extremal_classify(ising(7, -1)) == "ising-x-pointed(1)"
    prod = deligne_product(ising(1, 1), ising(3, 1))
    assert extremal_classify(prod) == "ising-x-ising"


def test_extremal_classify_ising_with_pointed():
    md = deligne_product(ising(1, 1), cyclic_pointed(2))
    got = extremal_classify(md)
    assert got.startswith("ising-x-pointed")
