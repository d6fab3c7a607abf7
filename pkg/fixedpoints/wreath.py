"""
Concrete model of the wreath group <j_theta(G), S_2> acting on two copies
of the permuted points.
"""

import logging
import math

from errors import InvolutionError
from fixedpoints.fixed_sets import FujikiInput
from permcore.group import close_group
from permcore.permutation import Perm

logger = logging.getLogger(__name__)


def embed_pair(data: FujikiInput, g: Perm) -> Perm:
    """j(g): g on the first copy, theta(g) on the second."""
    tg = data.theta(g)
    return g.concat(tg)


def swap_factors(degree: int) -> Perm:
    return Perm.from_images(list(range(degree, 2 * degree)) + list(range(degree)))


def wreath_order_check(data: FujikiInput) -> int:
    """
    Close <j(G), swap> and check its order against |G|^(n-1) n! for n = 2.

    Returns:
        Order of the wreath group

    Raises:
        InvolutionError: If the order is not 2|G|
    """
    G = data.group
    gens = [embed_pair(data, g) for g in G.generators] + [swap_factors(G.degree)]
    order = close_group(gens).order
    expected = G.order ** (2 - 1) * math.factorial(2)
    if order != expected:
        logger.error(f"Wreath group has order {order}, expected {expected}")
        raise InvolutionError(f"Wreath group order {order} differs from {expected}")
    return order


def commutes_in_wreath(data: FujikiInput, s: Perm, g: Perm) -> bool:
    """Whether j(g) commutes with swap o j(s), by literal composition."""
    jg = embed_pair(data, g)
    twisted = swap_factors(data.group.degree) * embed_pair(data, s)
    return jg * twisted == twisted * jg
