"""Galois permutations of simple objects, orbits, conjugate data, and the
identity battery built on them."""

import pytest

from mdtk.cyclo import rational
from mdtk.construct import (
    MetricGroup,
    double_abelian,
    fibonacci,
    ising,
    pointed,
    so5_level9,
)
from mdtk.galois import (
    bar_category,
    conjugate_category,
    galois_permutation,
    orbit,
    orbit_t,
    verify_galois_identities,
    working_conductor,
)
from mdtk.modular import (
    data_equal,
    fs_exponent,
    global_dim,
    ndim,
    verify,
)


def pointed_c3():
    return pointed(MetricGroup.generator_form((3,), (1,)), name="pointed-c3")


def pointed_c5():
    return pointed(MetricGroup.generator_form((5,), (1,)), name="pointed-c5")


# ---------------------------------------------------- working conductor


def test_working_conductor():
    assert working_conductor(ising(1, 1)) == 192
    assert working_conductor(fibonacci(1)) == 60
    assert working_conductor(pointed_c3()) == 36


# ----------------------------------------------------------- sigma hat


def test_ising_permutations():
    md = ising(1, 1)
    # k = 1, 7 mod 8 fix sqrt 2, k = 3, 5 mod 8 negate it and swap 1, psi
    assert galois_permutation(md, 7).mapping == (0, 1, 2)
    assert galois_permutation(md, 5).mapping == (1, 0, 2)
    assert galois_permutation(md, 11).mapping == (1, 0, 2)
    g5 = galois_permutation(md, 5)
    assert g5("1") == "psi" and g5("psi") == "1" and g5("sigma") == "sigma"


def test_permutation_requires_unit():
    with pytest.raises(ValueError):
        galois_permutation(ising(1, 1), 2)
    with pytest.raises(ValueError):
        galois_permutation(ising(1, 1), 3)  # 3 divides 192


def test_permutation_homomorphism():
    md = ising(1, 1)
    g5 = galois_permutation(md, 5)
    assert g5.compose(g5) == galois_permutation(md, 25).mapping
    fib = fibonacci(1)
    g7 = galois_permutation(fib, 7)
    g11 = galois_permutation(fib, 11)
    assert g7.compose(g11) == galois_permutation(fib, 77 % 60).mapping


def test_pointed_permutation_is_unit_scaling():
    md = pointed_c5()
    g = galois_permutation(md, 7)  # 7 = 2 mod 5
    assert g("g1") == "g2"
    assert g("g2") == "g4"
    assert g("1") == "1"


# --------------------------------------------------------------- orbits


def test_orbits():
    assert orbit(ising(1, 1), "sigma") == {"sigma"}
    assert orbit(ising(1, 1), "1") == {"1", "psi"}
    assert orbit(fibonacci(1), "1") == {"1", "tau"}
    assert orbit(pointed_c5(), "g1") == {"g1", "g2", "g3", "g4"}
    assert orbit(pointed_c5(), "1") == {"1"}


def test_orbit_t_is_suborbit():
    for md, lab in ((ising(1, 1), "sigma"), (fibonacci(1), "tau"),
                    (pointed_c5(), "g1")):
        sub, _ = orbit_t(md, lab)
        assert sub <= orbit(md, lab)


def test_orbit_t_values():
    sub, total = orbit_t(ising(1, 1), "sigma")
    assert sub == {"sigma"}
    assert total == rational(2)
    sub, total = orbit_t(ising(1, 1), "1")
    assert sub == {"1"}
    assert total == rational(1)
    sub, total = orbit_t(pointed_c5(), "g1")
    assert sub == {"g1", "g4"}
    assert total == rational(2)
    sub, total = orbit_t(pointed_c3(), "g1")
    assert sub == {"g1"}
    assert total == rational(1)


# -------------------------------------------------- conjugate categories


def test_conjugate_category_identity():
    md = fibonacci(1)
    assert conjugate_category(md, 1) is md


def test_conjugate_category_lands_in_family():
    c = conjugate_category(fibonacci(1), 7)
    assert verify(c).ok
    assert data_equal(c, fibonacci(2))
    assert c.name == "fibonacci-1^s7"
    assert fs_exponent(c) == 5
    assert ndim(c) == 5


def test_conjugate_category_composes():
    md = fibonacci(1)
    twice = conjugate_category(conjugate_category(md, 7), 7)
    assert data_equal(twice, conjugate_category(md, 49))
    md = ising(1, 1)
    twice = conjugate_category(conjugate_category(md, 5), 5)
    assert data_equal(twice, conjugate_category(md, 25))


def test_conjugate_category_preserves_invariants():
    for md in (ising(1, 1), so5_level9(1), pointed_c3()):
        N = working_conductor(md)
        k = next(u for u in range(2, N) if __import__("math").gcd(u, N) == 1)
        c = conjugate_category(md, k)
        assert fs_exponent(c) == fs_exponent(md)
        assert ndim(c) == ndim(md)
        assert verify(c).ok


# ---------------------------------------------------------- bar category


def test_bar_category_fibonacci():
    b = bar_category(fibonacci(1))
    assert b.rank == 4
    assert b.name == "bar(fibonacci-1)"
    assert global_dim(b) == rational(5)
    assert ndim(b) == 5
    assert fs_exponent(b) == 5
    assert verify(b).ok


def test_bar_category_rational_dim_is_identity():
    # rational global dimension has a single Galois value, so bar changes
    # nothing
    b = bar_category(ising(1, 1))
    assert b.rank == 3
    assert data_equal(b, ising(1, 1))


# ------------------------------------------------------ identity battery


def test_galois_identities_generators():
    for md in (ising(1, 1), fibonacci(1), so5_level9(1), pointed_c3(),
               double_abelian((2,))):
        report = verify_galois_identities(md, generators_only=True)
        assert report.ok, (md.name, report.failures)


def test_galois_identities_full_small():
    for md in (fibonacci(1), pointed_c3(), pointed_c5()):
        report = verify_galois_identities(md)
        assert report.ok, (md.name, report.failures)


def test_galois_identity_check_names():
    report = verify_galois_identities(fibonacci(1), generators_only=True)
    names = {c.name for c in report.checks}
    assert names == {
        "permutation-exists",
        "homomorphism",
        "dim-identity",
        "t-squared-identity",
    }
