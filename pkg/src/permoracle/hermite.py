"""
Hermite's criterion for polynomial systems.

F permutes F_q^n iff the top monomial x_1^(q-1)...x_n^(q-1) has a nonzero
coefficient in prod f_i^(q-1), and a zero coefficient in prod f_i^(t_i) for
every other tuple with some t_i not divisible by p.
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import config
from src.errors import BudgetExceeded
from src.mpoly.poly import MultiPoly, PolySystem
from src.permoracle.verdict import PermVerdict

logger = logging.getLogger(__name__)


def power_table(f: MultiPoly, top: int) -> List[MultiPoly]:
    """
    [f^0, f^1, ..., f^top], each power built from the previous one.
    """
    powers = [MultiPoly.constant(f.field, f.nvars, 1)]
    for _ in range(top):
        powers.append(powers[-1] * f)
    return powers


def top_coefficient(a: MultiPoly, b: MultiPoly) -> int:
    """
    Coefficient of prod x_i^(q-1) in the reduced product a*b, without forming it.

    Per coordinate, e_a + e_b must fold to q-1: e_a = q-1 pairs with 0 or q-1,
    any other e_a pairs with q-1-e_a only.
    """
    field = a.field
    top = field.q - 1
    b_terms = b.terms
    total = 0
    for exps, ca in a.terms.items():
        options = [(0, top) if e == top else (top - e,) for e in exps]
        for partner in itertools.product(*options):
            cb = b_terms.get(partner)
            if cb:
                total = field.add(total, field.mul(ca, cb))
    return total


def hermite_check(system: PolySystem, budget: Optional[int] = None) -> PermVerdict:
    """
    Decide bijectivity of F through Hermite's criterion.

    Args:
        system: F = (f_1, ..., f_n)
        budget: maximum number of exponent tuples q^n, defaults to the configured Hermite budget
    Returns: PermVerdict with the first failing tuple in lexicographic order
    """
    field, n = system.field, system.nvars
    q, p = field.q, field.p
    tuples = q ** n
    budget = budget if budget is not None else config.HERMITE_BUDGET
    if tuples > budget:
        raise BudgetExceeded(f"Hermite tuples over GF({q})^{n}", tuples, budget)

    powers = [power_table(f, q - 1) for f in system]
    full = (q - 1,) * n

    prefix = MultiPoly.constant(field, n, 1)
    for f_powers in powers[:-1]:
        prefix = prefix * f_powers[q - 1]
    if top_coefficient(prefix, powers[-1][q - 1]) == 0:
        logger.debug(f"Hermite condition (i) fails for {system.to_infix()}")
        return PermVerdict(False, hermite_tuple=full, method="hermite")

    failing = _first_failing_tuple(powers, q, p, n)
    if failing is not None:
        logger.debug(f"Hermite condition (ii) fails at {failing} for {system.to_infix()}")
        return PermVerdict(False, hermite_tuple=failing, method="hermite")
    return PermVerdict(True, method="hermite")


def _first_failing_tuple(powers: Sequence[Sequence[MultiPoly]], q: int, p: int, n: int) -> Optional[Tuple[int, ...]]:
    """
    Depth-first walk over tuples in lexicographic order with cached prefix products.
    """
    field = powers[0][0].field
    full = (q - 1,) * n
    cache: Dict[Tuple[int, ...], MultiPoly] = {(): MultiPoly.constant(field, n, 1)}

    def walk(prefix: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        depth = len(prefix)
        product = cache[prefix]
        if depth == n - 1:
            for t in range(q):
                candidate = prefix + (t,)
                if candidate == full or all(x % p == 0 for x in candidate):
                    continue
                if top_coefficient(product, powers[depth][t]):
                    return candidate
            return None
        for t in range(q):
            child = prefix + (t,)
            cache[child] = product * powers[depth][t]
            found = walk(child)
            del cache[child]
            if found is not None:
                return found
        return None

    return walk(())
