"""
Even characteristic: six permutation cases, reduced to (x, y), (x^2, y),
(x^2, y^2) or the fifth class (y^2 + x, c1 x^2 + c2 y^2 + c3 x + c4 y).

The classes (x, y^2) and (x^2, y) coincide after swapping both variables and
coordinates; chains always finish on (x^2, y).
"""

from typing import Tuple

from src.errors import NotNormalized, OddCharacteristic
from src.gf.field import FieldSpec
from src.gf.linearized import is_linearized_perm
from src.gf.residues import sqrt_index
from src.quadclass.chain import ChainBuilder
from src.quadclass.coeffs import CLASS_FIFTH, CLASS_X2_Y, CLASS_X2_Y2, CLASS_XY, QuadCoeffs, QuadVerdict
from src.quadclass.matching import Case, match_cases


def _sqrt(field: FieldSpec, a: int) -> int:
    return sqrt_index(field, a)


def _xor(first: bool, second: bool) -> bool:
    return first != second


def l1_coefficients(g: QuadCoeffs) -> Tuple[int, int, int]:
    """
    (D1, C1, A1) of L1(y) = A1 y^4 + C1 y^2 + D1 y, lowest power first.
    """
    f = g.field
    _, _, a3, a4, a5 = g.a
    b1, _, b3, b4, b5 = g.b
    a4_sq_inv = f.inv(f.mul(a4, a4))
    big_a = f.mul(f.mul(b1, f.mul(a3, a3)), a4_sq_inv)
    big_c = f.sum([b3, f.mul(f.mul(b1, f.mul(a5, a5)), a4_sq_inv), f.div(f.mul(b4, a3), a4)])
    big_d = f.add(f.div(f.mul(b4, a5), a4), b5)
    return big_d, big_c, big_a


def l2_coefficients(g: QuadCoeffs) -> Tuple[int, int, int]:
    """
    (d3, d2, d1) of L2(Z) = d1 Z^4 + d2 Z^2 + d3 Z, lowest power first.
    """
    f = g.field
    a1, _, a3, a4, a5 = g.a
    b1, _, b3, b4, b5 = g.b
    r1, r3 = _sqrt(f, a1), _sqrt(f, a3)
    a1a3 = f.mul(a1, a3)
    d1 = f.div(f.add(f.mul(a1, b3), f.mul(a3, b1)), a1a3)
    mix = f.add(f.div(a5, r3), f.div(a4, r1))
    d2 = f.add(
        f.div(f.add(f.mul(b1, f.mul(a5, a5)), f.mul(b3, f.mul(a4, a4))), a1a3),
        f.mul(mix, f.add(f.div(b4, r1), f.div(b5, r3))),
    )
    r13 = _sqrt(f, a1a3)
    d3 = f.mul(mix, f.add(f.div(f.mul(a4, b5), r13), f.div(f.mul(a5, b4), r13)))
    return d3, d2, d1


def _f2_branch(g: QuadCoeffs) -> bool:
    """f2 = b1 x^2 + b3 y^2 + b5 y with b1 != 0, or b3 y^2 + b4 x + b5 y with b4 != 0."""
    b1, b2, _, b4, _ = g.b
    return b2 == 0 and ((b1 != 0 and b4 == 0) or (b1 == 0 and b4 != 0))


def _is_case_i(g: QuadCoeffs) -> bool:
    a1, a2, a3, a4, a5 = g.a
    return a1 == a2 == a3 == a4 == 0 and a5 != 0 and _f2_branch(g)


def _is_case_ii(g: QuadCoeffs) -> bool:
    f = g.field
    a1, a2, a3, a4, a5 = g.a
    b1, b2, b3, b4, b5 = g.b
    if not (a1 == a2 == a3 == 0 and a4 != 0 and a5 != 0 and b2 == 0):
        return False
    linear = f.add(f.mul(a4, b5), f.mul(a5, b4)) == 0
    square = f.add(f.mul(f.mul(a5, a5), b1), f.mul(f.mul(a4, a4), b3)) == 0
    return _xor(linear, square)


def _is_case_iii(g: QuadCoeffs) -> bool:
    a1, a2, a3, a4, a5 = g.a
    return a1 == a2 == 0 and a3 != 0 and a4 == a5 == 0 and _f2_branch(g)


def _is_case_iv(g: QuadCoeffs) -> bool:
    a1, a2, a3, a4, _ = g.a
    if not (a1 == a2 == 0 and a3 != 0 and a4 != 0 and g.b[1] == 0):
        return False
    return is_linearized_perm(g.field, l1_coefficients(g))


def _is_case_v(g: QuadCoeffs) -> bool:
    f = g.field
    a1, a2, a3, a4, a5 = g.a
    b1, b2, b3, b4, b5 = g.b
    if not (a2 == 0 and a1 != 0 and a3 != 0 and a4 == a5 == 0 and b2 == 0):
        return False
    square = f.add(f.mul(a1, b3), f.mul(a3, b1)) == 0
    linear = f.add(f.mul(_sqrt(f, a1), b5), f.mul(_sqrt(f, a3), b4)) == 0
    return _xor(square, linear)


def _is_case_vi(g: QuadCoeffs) -> bool:
    f = g.field
    a1, a2, a3, a4, a5 = g.a
    if not (a2 == 0 and a1 != 0 and a3 != 0 and g.b[1] == 0):
        return False
    if f.mul(_sqrt(f, a1), a5) == f.mul(_sqrt(f, a3), a4):
        return False
    return is_linearized_perm(f, l2_coefficients(g))


def _finish_x_y2(chain: ChainBuilder) -> str:
    # (x, y^2) -> (y, x^2) -> (x^2, y)
    chain.swap_variables()
    chain.swap_coordinates()
    return CLASS_X2_Y


def _build_i(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a5 = g.a[4]
    b1, b4 = g.b[0], g.b[3]
    if b1 != 0:
        chain.right(((0, f.inv(_sqrt(f, b1))), (f.inv(a5), 0)))
        chain.strip()
        return _finish_x_y2(chain)
    chain.strip(order=(1, 0))
    chain.left(((0, f.inv(b4)), (f.inv(a5), 0)))
    return CLASS_XY


def _build_ii(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a4, a5 = g.a[3], g.a[4]
    a4_inv = f.inv(a4)
    chain.right(((a4_inv, f.mul(a5, a4_inv)), (0, 1)))
    chain.strip()
    chain.monic()
    if chain.system[1].degree == 2:
        return _finish_x_y2(chain)
    return CLASS_XY


def _build_iii(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a3 = g.a[2]
    b1, b4 = g.b[0], g.b[3]
    chain.strip(order=(1, 0))
    if b1 != 0:
        chain.left(((0, f.inv(b1)), (f.inv(a3), 0)))
        return CLASS_X2_Y2
    chain.monic()
    chain.swap_variables()
    return CLASS_X2_Y


def _build_iv(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a3, a4, a5 = g.a[2], g.a[3], g.a[4]
    r3 = _sqrt(f, a3)
    a4_inv = f.inv(a4)
    chain.right(((a4_inv, f.div(a5, f.mul(a4, r3))), (0, f.inv(r3))))
    return CLASS_FIFTH


def _build_v(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a1, a3 = g.a[0], g.a[2]
    r1_inv = f.inv(_sqrt(f, a1))
    chain.right(((r1_inv, f.mul(_sqrt(f, a3), r1_inv)), (0, 1)))
    chain.strip()
    chain.monic()
    if chain.system[1].degree == 2:
        return CLASS_X2_Y2
    return CLASS_X2_Y


def _build_vi(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a1, a3, a4, a5 = g.a[0], g.a[2], g.a[3], g.a[4]
    alpha, beta = _sqrt(f, a1), _sqrt(f, a3)
    a4_scaled, a5_scaled = f.div(a4, alpha), f.div(a5, beta)
    s = f.add(a4_scaled, a5_scaled)
    alpha_s_inv = f.inv(f.mul(alpha, s))
    beta_s_inv = f.inv(f.mul(beta, s))
    chain.right((
        (alpha_s_inv, f.mul(a5_scaled, alpha_s_inv)),
        (beta_s_inv, f.mul(a4_scaled, beta_s_inv)),
    ))
    return CLASS_FIFTH


EVEN_CASES = (
    Case("Even-i", _is_case_i, _build_i),
    Case("Even-ii", _is_case_ii, _build_ii),
    Case("Even-iii", _is_case_iii, _build_iii),
    Case("Even-iv", _is_case_iv, _build_iv),
    Case("Even-v", _is_case_v, _build_v),
    Case("Even-vi", _is_case_vi, _build_vi),
)


def classify_even(coeffs: QuadCoeffs) -> QuadVerdict:
    """
    Classify a normalized (a2 = 0) system over F_{2^m}.

    Args:
        coeffs: the ten coefficients
    Returns: QuadVerdict with case Even-i..vi and its class, or NotPP with a collision
    """
    if coeffs.field.p != 2:
        raise OddCharacteristic("classify_even needs characteristic 2")
    if coeffs.a[1] != 0:
        raise NotNormalized("a2 must be eliminated before classification")
    return match_cases(coeffs, EVEN_CASES)
