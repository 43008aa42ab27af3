"""Property tests for the exact scalar rings and the multivector algebra."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from spintab.core import (
    Multivector,
    Signature,
    basis_blades,
    clifford_conjugate,
    grade_involution,
    hermitian_adjoint,
    reverse,
    scalar_part,
    scalar_product,
)
from spintab.scalars import GaussianRational, RationalQuaternion, conjugate

small_int = st.integers(min_value=-5, max_value=5)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=4))
gaussians = st.builds(GaussianRational.of, rationals, rationals)
quaternions = st.builds(RationalQuaternion, rationals, rationals, rationals, rationals)

signatures = st.tuples(
    st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)
).filter(lambda pq: 1 <= pq[0] + pq[1] <= 4)


@st.composite
def multivector_triples(draw, coeffs=rationals):
    p, q = draw(signatures)
    sig = Signature(p, q)
    blades = basis_blades(sig)
    out = []
    for _ in range(3):
        terms = draw(
            st.dictionaries(st.sampled_from(blades), coeffs, max_size=4)
        )
        out.append(Multivector.from_terms(sig, terms))
    return sig, out


# -- scalar rings -----------------------------------------------------------


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)


@given(gaussians)
def test_gaussian_inverse(a):
    n = a * conjugate(a)
    assert n.im == 0 and n.re >= 0
    if n.re:
        inv = conjugate(a) * GaussianRational.of(Fraction(1) / n.re)
        assert a * inv == GaussianRational.of(1)


@given(quaternions, quaternions, quaternions)
def test_quaternion_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert c * (a + b) == c * a + c * b
    assert (a * b) * c == a * (b * c)
    assert conjugate(a * b) == conjugate(b) * conjugate(a)


@given(quaternions, quaternions)
def test_quaternion_norm_multiplicative(a, b):
    def norm(x):
        return (x * conjugate(x)).w

    assert norm(a * b) == norm(a) * norm(b)


# -- multivector algebra ----------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(multivector_triples())
def test_product_associative_distributive(data):
    _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(multivector_triples())
def test_involution_antihomomorphisms(data):
    _, (a, b, _) = data
    assert reverse(a * b) == reverse(b) * reverse(a)
    assert grade_involution(a * b) == grade_involution(a) * grade_involution(b)
    assert clifford_conjugate(a) == reverse(grade_involution(a))
    assert reverse(reverse(a)) == a
    assert grade_involution(grade_involution(a)) == a


@settings(max_examples=60, deadline=None)
@given(multivector_triples())
def test_hermitian_adjoint_antihomomorphism(data):
    _, (a, b, _) = data
    assert hermitian_adjoint(a * b) == hermitian_adjoint(b) * hermitian_adjoint(a)
    assert hermitian_adjoint(hermitian_adjoint(a)) == a


@settings(max_examples=60, deadline=None)
@given(multivector_triples(coeffs=gaussians))
def test_hermitian_adjoint_conjugates_coefficients(data):
    sig, (a, _, _) = data
    imag = Multivector.scalar(sig, GaussianRational.of(0, 1))
    assert hermitian_adjoint(imag * a) == hermitian_adjoint(a) * (-imag)


@settings(max_examples=60, deadline=None)
@given(multivector_triples())
def test_scalar_product_symmetric(data):
    _, (a, b, _) = data
    assert scalar_product(a, b) == scalar_product(b, a)
    assert scalar_product(a, b) == scalar_part(a * b)


@settings(max_examples=40, deadline=None)
@given(multivector_triples())
def test_generators_satisfy_signature(data):
    sig, _ = data
    for i in range(1, sig.n + 1):
        e = Multivector.generator(sig, i)
        assert e * e == Multivector.scalar(sig, Fraction(sig.generator_square(i)))
        for j in range(i + 1, sig.n + 1):
            f = Multivector.generator(sig, j)
            assert e * f == -(f * e)
