"""End-to-end twists: the worked examples, synthetic cocycles and verification."""

from fractions import Fraction

import pytest

from hypertwist.autos import Comparison, MobiusAutomorphism
from hypertwist.cocycle import cocycle_from_generators
from hypertwist.errors import InconsistentGenerators, InvalidOverride, TwistError
from hypertwist.field import Matrix, cyclo_field, galois_group, kronecker_symbol
from hypertwist.models import GeometricModel, to_geometric
from hypertwist.mpoly import TernaryForm, order_xyz, reduce_mod_conic, substitute_linear
from hypertwist.twist import (character_to_e, compute_a_cocycle, compute_twist,
                              verify_twist, IotaHom)

from helpers import (EX3_CONIC, EX3_SEXTIC, I, example1, example2, example3,
                     example3_printed_M, hyper, synthetic_cases)


def form(terms, degree):
    return TernaryForm(terms, degree)


def test_example_1_with_printed_choices():
    H, xi = example1()
    out = compute_twist(H, xi, M=Matrix.diag([I, I, 1]), v=I)
    assert out.e == -2
    assert out.normalized.t_coeff == -2
    assert out.normalized.F == form({(3, 0, 1): 1, (2, 1, 1): 3, (0, 3, 1): 1}, 4)
    assert out.normalized.conic == form({(0, 0, 2): 1, (1, 1, 0): 1}, 2)
    assert out.a_cocycle[3] == -1
    assert out.iota.conductor == 8
    assert out.iota.trivial_on() == [1, 3]
    assert verify_twist(H, xi, out).passed


def test_example_1_flipping_e_is_caught_at_sigma_3():
    H, xi = example1()
    out = compute_twist(H, xi, M=Matrix.diag([I, I, 1]), v=I)
    report = verify_twist(H, xi, out, e=2)
    assert not report.passed
    assert 3 in report.flipped()


def test_example_2_with_printed_start():
    H, xi = example2()
    out = compute_twist(H, xi, M0=Matrix.identity(3, 4) * (1 + I))
    assert out.M == Matrix([[1 + I, 1 - I, 0], [1 - I, 1 + I, 0], [0, 0, 2 * I]])
    assert out.v == 1
    assert out.e == -1
    assert out.twisted.conic == form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2}, 2) * -2
    assert out.twisted.t_coeff == -1
    assert out.twisted.F == form({(4, 0, 0): 48, (2, 2, 0): 160, (0, 4, 0): 48}, 4)
    assert out.hyperelliptic_form is None


def test_example_2_symmetric_model():
    H, xi = example2()
    out = compute_twist(H, xi, M0=Matrix.identity(3, 4) * (1 + I))
    # A = X - Y, B = X + Y, C = 2Z, D = T/4 turns A^2+B^2+C^2 into 2(X^2+Y^2+2Z^2)
    S = Matrix([[1, -1, 0], [1, 1, 0], [0, 0, 2]])
    sym_conic = form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}, 2)
    quartic = form({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}, 4)
    conic = form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2}, 2)
    assert substitute_linear(sym_conic, S) == conic * 2
    # -2 D^2 = -T^2/8, and -T^2 = F on the curve
    lhs = substitute_linear(quartic, S)
    diff, _ = reduce_mod_conic(lhs - out.twisted.F * Fraction(1, 8), conic)
    assert diff.is_zero()


def test_example_3_with_printed_matrix():
    H, xi = example3()
    M = example3_printed_M()
    G = to_geometric(H)
    a, FM, QM = compute_a_cocycle(G.F, M, G.conic, 10)
    assert a.is_trivial()
    assert not FM.is_rational()
    out = compute_twist(H, xi, M=M, v=cyclo_field(10).one())
    # F o M = g + q (Q o M) with g rational and q != 0
    rem, q = reduce_mod_conic(FM - out.twisted.F.change_field(10), QM)
    assert rem.is_zero() and not q.is_zero()
    assert out.e == 1
    assert out.twisted.conic == form(EX3_CONIC, 2) * -1
    sextic, _ = reduce_mod_conic(out.twisted.F, form(EX3_CONIC, 2), order_xyz)
    assert sextic == form(EX3_SEXTIC, 6)
    assert verify_twist(H, xi, out).passed


def test_example_3_without_overrides():
    H, xi = example3()
    out = compute_twist(H, xi)
    assert verify_twist(H, xi, out).passed
    assert out.twisted.F.is_rational() and out.twisted.conic.is_rational()


@pytest.mark.parametrize("case", synthetic_cases(), ids=lambda c: c[0])
def test_synthetic_cocycles(case):
    label, H, xi = case
    out = compute_twist(H, xi)
    for a in xi.group:
        assert out.xibar[a] @ out.M.galois(a) == out.M
        assert out.a_cocycle[a] * out.v.galois(a) == out.v
    report = verify_twist(H, xi, out)
    assert report.passed
    assert all(c == Comparison.EQUAL for c in report.realization.values())


def test_pure_quadratic_twist_matches_scaling_f():
    # sigma -> iota^chi(sigma) is the quadratic twist y^2 = D f
    case = next(c for c in synthetic_cases() if c[0] == "N4 c0 chi-4")
    _, H, xi = case
    out = compute_twist(H, xi)
    assert out.hyperelliptic_form.f == tuple(-c for c in H.f)


def test_trivial_cocycle_returns_the_curve():
    H = hyper([0, 1, 0, 0, 0, 3, 0, 1])
    xi = cocycle_from_generators(4, [], genus=3)
    out = compute_twist(H, xi)
    assert out.e == 1
    assert out.hyperelliptic_form is not None
    assert verify_twist(H, xi, out).passed


def test_geometric_input_with_t_coefficient():
    H, xi = example2()
    out = compute_twist(H, xi, M0=Matrix.identity(3, 4) * (1 + I))
    # twisting the twist back by the same class returns e = 1 up to squares
    G = out.twisted
    assert G.t_coeff == -1


def test_bad_overrides_are_rejected():
    H, xi = example1()
    with pytest.raises(InvalidOverride) as exc:
        compute_twist(H, xi, M=Matrix.identity(3, 4))
    assert exc.value.step == 5
    with pytest.raises(InvalidOverride):
        compute_twist(H, xi, M=Matrix.diag([I, I, 1]), v=cyclo_field(4).one())


def test_errors_carry_step_labels():
    # x -> 2/x, y -> 4y/x^4 is a consistent cocycle but not an automorphism
    H = hyper([0, 1, 0, 0, 0, 3, 0, 1])
    wrong = MobiusAutomorphism(Matrix([[0, 2], [1, 0]]).change_field(4), 3, 4)
    xi = cocycle_from_generators(4, [(3, wrong)])
    with pytest.raises(TwistError) as exc:
        compute_twist(H, xi)
    assert exc.value.step == "3-4"


def test_character_to_e():
    chi = {a: kronecker_symbol(-8, a) == 1 for a in galois_group(8)}
    assert character_to_e(IotaHom(8, chi)) == -2
    chi = {a: kronecker_symbol(5, a) == 1 for a in galois_group(20)}
    assert character_to_e(IotaHom(20, chi)) == 5
    assert character_to_e(IotaHom(4, {1: True, 3: True})) == 1
