"""Cocycle extension and validation, GL3 lifts and GL2 liftability."""

import random

import pytest
import sympy as sp

from hypertwist.autos import Comparison, MobiusAutomorphism, psi_embed
from hypertwist.cocycle import (Cocycle, MatrixCocycle, cocycle_from_generators,
                                exact_matrix, gl2_candidates, group_generators,
                                lift_cocycle_gl3, to_geometric_cocycle, try_lift_gl2,
                                twisted_norm)
from hypertwist.errors import InconsistentGenerators, InvalidInput, VerificationFailed
from hypertwist.field import Matrix, cyclo_field
from hypertwist.models import to_geometric
from hypertwist.mpoly import TernaryForm, substitute_linear
from hypertwist.twist import twist_gl2_fastpath

from helpers import (I, example1, example2, example3, example3_alpha, hyper,
                     random_cyclo, synthetic_cases)

MINUS_ID = Matrix.diag([-1, -1]).change_field(4)


def test_generators():
    assert group_generators(4) == [3]
    assert group_generators(8) == [3, 5]
    assert len(group_generators(10)) == 1
    assert group_generators(12) == [5, 7]


@pytest.mark.parametrize("make", [example1, example2, example3])
def test_example_cocycles_validate(make):
    _, xi = make()
    assert xi.failures() == []
    assert xi[1].compare(MobiusAutomorphism.identity(xi[1].genus, xi.N)) == Comparison.EQUAL


def test_example_3_conjugate_generator_is_also_consistent():
    # the conjugate alpha_3 = sigma(alpha_1) also satisfies the product relation
    H, _ = example3()
    a3 = example3_alpha().galois(3)
    xi = cocycle_from_generators(10, [(3, a3)])
    assert xi.failures() == []


def test_inconsistent_generator_is_rejected():
    H = hyper([1, 0, 0, 0, 14, 0, 0, 0, 1])
    alpha = MobiusAutomorphism(Matrix([[0, -I], [I, 0]]), 3)
    delta = MobiusAutomorphism(Matrix.diag([I, 1]), 3, 1)   # x -> i x, y -> y
    bad = delta.compose(alpha)
    with pytest.raises(InconsistentGenerators):
        cocycle_from_generators(4, [(3, bad)])


def test_generators_must_generate():
    alpha = MobiusAutomorphism.identity(3, 8)
    with pytest.raises(InvalidInput):
        cocycle_from_generators(8, [(3, alpha)])


def test_cocycle_needs_all_residues():
    with pytest.raises(InvalidInput):
        Cocycle(4, {1: MobiusAutomorphism.identity(3, 4)})


def test_inflation_is_still_a_cocycle():
    _, xi = example1()
    big = xi.inflate(8)
    assert big.failures() == []
    assert big[7].compare(xi[3].change_field(8)) == Comparison.EQUAL


@pytest.mark.parametrize("case", synthetic_cases(), ids=lambda c: c[0])
def test_synthetic_cocycles_validate(case):
    _, _, xi = case
    assert xi.failures() == []


@pytest.mark.parametrize("make", [example1, example2, example3])
def test_gl3_lift_is_an_exact_cocycle(make):
    H, xi = make()
    G = to_geometric(H)
    xg = to_geometric_cocycle(xi, G)
    xibar = lift_cocycle_gl3(xg)
    assert xibar.failures() == []
    conic = TernaryForm.conic_xy().change_field(xibar.N)
    for a in xibar.group:
        assert substitute_linear(conic, xibar[a]) == conic


def test_gl3_lift_values_for_examples_1_and_2():
    H, xi = example1()
    xibar = lift_cocycle_gl3(to_geometric_cocycle(xi, to_geometric(H)))
    assert xibar[3] == Matrix.diag([-1, -1, 1]).change_field(xibar.N)
    H, xi = example2()
    xibar = lift_cocycle_gl3(to_geometric_cocycle(xi, to_geometric(H)))
    assert xibar[3] == Matrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]]).change_field(4)


def test_matrix_cocycle_rejects_any_perturbed_image():
    rng = random.Random(8)
    H, xi = example3()
    xibar = lift_cocycle_gl3(to_geometric_cocycle(xi, to_geometric(H)))
    for a in xibar.group:
        if a == 1:
            continue
        c = random_cyclo(rng, 10)
        if c.is_one():
            continue
        images = dict(xibar.images)
        images[a] = images[a] * c
        with pytest.raises(VerificationFailed):
            MatrixCocycle(10, images)


def test_example_2_does_not_lift_to_gl2():
    _, xi = example2()
    assert try_lift_gl2(xi, 3) is None
    (s, options), = gl2_candidates(xi, 3)
    assert s == 3 and len(options) == 2
    for A in options:
        assert twisted_norm(A, 3, 4) == MINUS_ID


def test_exact_matrix_rescales_to_det():
    alpha = MobiusAutomorphism(Matrix([[1, 0], [0, -1]]).change_field(4), 3, I)
    # needs c^2 = det/kappa = i, which has no root in Q(i)
    assert exact_matrix(alpha) is None
    alpha = alpha.change_field(8)
    A = exact_matrix(alpha)
    assert A is not None
    assert MobiusAutomorphism(A, 3).compare(alpha) == Comparison.EQUAL


def test_gl2_fast_path_example():
    H = hyper([0, 1, 0, 0, 0, 1])
    tau = MobiusAutomorphism(Matrix.diag([-I, I]), 2)
    xi = cocycle_from_generators(4, [(3, tau)])
    lift = try_lift_gl2(xi, 2)
    assert lift is not None and lift.failures() == []
    twisted, phi, _ = twist_gl2_fastpath(H, lift)
    assert twisted.f[:6] == (0, -2, 0, 0, 0, -2)
    assert phi.matrix == Matrix.diag([1 - I, 1 + I])

    # hand expansion of det(M)^-2 (c x + d)^6 f((a x + b)/(c x + d)) with sympy
    x = sp.Symbol("x")
    a, d = 1 - sp.I, 1 + sp.I
    expr = sp.expand((d ** 6 * ((a * x / d) ** 5 + a * x / d)) / (a * d) ** 2)
    assert sp.Poly(expr, x).all_coeffs() == [-2, 0, 0, 0, -2, 0]

    # phi o sigma(phi)^-1 = tau for the nontrivial sigma
    realized = phi.compose(phi.galois(3).inverse())
    assert realized.compare(tau) == Comparison.EQUAL


def test_gl2_trivial_cocycle_gives_same_curve():
    H = hyper([0, 1, 0, 0, 0, 1])
    xi = cocycle_from_generators(4, [], genus=2)
    lift = try_lift_gl2(xi, 2)
    twisted, phi, _ = twist_gl2_fastpath(H, lift)
    # M = 2 Id: the same curve with y scaled by 2
    assert phi.matrix == Matrix.identity(2, 4) * 2
    assert twisted.f == tuple(4 * c for c in H.f)
