"""
Odd characteristic: every bivariate quadratic permutation is equivalent to (x, y).
"""

from src.errors import EvenCharacteristic, NotNormalized
from src.quadclass.chain import ChainBuilder
from src.quadclass.coeffs import CLASS_XY, QuadCoeffs, QuadVerdict
from src.quadclass.matching import Case, match_cases


def _is_case_i(g: QuadCoeffs) -> bool:
    a1, a2, a3, a4, a5 = g.a
    b1, b2, b3, b4, b5 = g.b
    return a1 == a2 == a3 == a4 == 0 and a5 != 0 and b1 == b2 == 0 and b4 != 0


def _is_case_ii(g: QuadCoeffs) -> bool:
    f = g.field
    a1, a2, a3, a4, a5 = g.a
    b1, b2, b3, b4, b5 = g.b
    return (
        a1 == a2 == 0 and a3 != 0 and a4 != 0 and b1 == b2 == 0
        and f.sub(f.mul(a3, b4), f.mul(a4, b3)) == 0
        and f.sub(f.mul(a4, b5), f.mul(a5, b4)) != 0
    )


def _is_case_iii(g: QuadCoeffs) -> bool:
    f = g.field
    a1, a2, a3, a4, a5 = g.a
    b1, b2, b3, b4, b5 = g.b
    if not (a1 == a2 == a3 == 0 and a4 != 0 and a5 != 0):
        return False
    square_part = f.sum([
        f.mul(f.mul(a5, a5), b1),
        f.neg(f.mul(f.mul(a4, a5), b2)),
        f.mul(b3, f.mul(a4, a4)),
    ])
    cross_part = f.sub(f.mul(b2, a5), f.mul(f.from_int(2), f.mul(a4, b3)))
    return square_part == 0 and cross_part == 0 and f.sub(f.mul(a4, b5), f.mul(a5, b4)) != 0


def _build_i(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a5, b4 = g.a[4], g.b[3]
    chain.strip(order=(1, 0))
    chain.left(((0, f.inv(b4)), (f.inv(a5), 0)))
    return CLASS_XY


def _build_ii(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a3, a4, a5 = g.a[2], g.a[3], g.a[4]
    b3, b4, b5 = g.b[2], g.b[3], g.b[4]
    if b4 == 0:
        # then b3 = 0 and f2 = b5 y: swapping coordinates gives the shape of case (i)
        chain.swap_coordinates()
        return _build_i(g.swap_coordinates(), chain)
    d = f.sub(f.mul(a5, b4), f.mul(a4, b5))
    d_inv = f.inv(d)
    chain.left(((f.mul(b4, d_inv), f.neg(f.mul(a4, d_inv))), (0, f.inv(b4))))
    chain.strip(order=(1, 0))
    chain.swap_coordinates()
    return CLASS_XY


def _build_iii(g: QuadCoeffs, chain: ChainBuilder) -> str:
    f = g.field
    a4, a5 = g.a[3], g.a[4]
    b4, b5 = g.b[3], g.b[4]
    a5_inv = f.inv(a5)
    chain.right(((1, 0), (f.neg(f.mul(a4, a5_inv)), a5_inv)))
    d = f.sub(f.mul(a5, b4), f.mul(a4, b5))
    chain.left(((0, f.div(a5, d)), (1, 0)))
    chain.swap_coordinates()
    chain.strip(order=(1, 0))
    chain.swap_coordinates()
    return CLASS_XY


ODD_CASES = (
    Case("Odd-i", _is_case_i, _build_i),
    Case("Odd-ii", _is_case_ii, _build_ii),
    Case("Odd-iii", _is_case_iii, _build_iii),
)


def classify_odd(coeffs: QuadCoeffs) -> QuadVerdict:
    """
    Classify a normalized (a2 = 0) system over a field of odd characteristic.

    Args:
        coeffs: the ten coefficients
    Returns: QuadVerdict with case Odd-i/ii/iii and class (x, y), or NotPP with a collision
    """
    if coeffs.field.p == 2:
        raise EvenCharacteristic("classify_odd needs odd characteristic")
    if coeffs.a[1] != 0:
        raise NotNormalized("a2 must be eliminated before classification")
    return match_cases(coeffs, ODD_CASES)
