"""Enumeration of admissible characters on a box, shared by tests and ``verify``."""

from __future__ import annotations

import math
from fractions import Fraction

from .chern import ChernCharacter
from .surface import DivisorClass, Surface


def characters(X: Surface, r_max: int, c_max: int, delta_max, r_min: int = 1, delta_min=0):
    """Admissible ``(r, kE+lF, ch2)`` with ``r_min <= r <= r_max``, ``|k|, |l| <= c_max``
    and ``delta_min <= Delta <= delta_max``.

    Admissible ``ch2`` run over ``k e / 2 + Z``; each step changes ``Delta`` by ``1/r``.
    """
    delta_max, delta_min = Fraction(delta_max), Fraction(delta_min)
    for r in range(r_min, r_max + 1):
        for k in range(-c_max, c_max + 1):
            for l in range(-c_max, c_max + 1):
                c1 = DivisorClass(k, l)
                half_nu_sq = Fraction(X.square(c1), 2 * r * r)
                offset = Fraction(k * X.e, 2) % 1
                # ch2 = r (nu^2/2 - Delta)
                hi = r * (half_nu_sq - delta_min)
                lo = r * (half_nu_sq - delta_max)
                n_hi = math.floor(hi - offset)
                n_lo = math.ceil(lo - offset)
                for n in range(n_hi, n_lo - 1, -1):
                    yield ChernCharacter(r, c1, offset + n)
