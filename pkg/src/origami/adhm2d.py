"""Arm/leg tangent characters of the 2D ADHM moduli space at fixed points.

Independent of the origami characters; used as an oracle for the 2D reduction
and for the Hilbert-scheme series G.
"""

from __future__ import annotations

from .kchar import Character
from .partitions import Partition


def rel_arm(lam: Partition, i: int, j: int) -> int:
    return (lam[i] if i < len(lam) else 0) - j - 1


def rel_leg(lam: Partition, i: int, j: int) -> int:
    conj = lam.conjugate()
    return (conj[j] if j < len(conj) else 0) - i - 1


def pair_char(la: Partition, lb: Partition) -> Character:
    """Summand for an ordered pair of slots, without framing weights.

    Arms and legs are relative: the arm is read in one partition and the leg
    in the other, so either may be negative.
    """
    out = Character()
    for i, j in la.boxes():
        out = out + Character.t(1, rel_leg(lb, i, j) + 1) * Character.t(2, -rel_arm(la, i, j))
    for i, j in lb.boxes():
        out = out + Character.t(1, -rel_leg(la, i, j)) * Character.t(2, rel_arm(lb, i, j) + 1)
    return out


def framed_tangent_12(lams, label: str = "12") -> Character:
    """t_12 times the tangent character at a rank-r fixed point (framings w_{label,alpha})."""
    out = Character()
    ws = [Character.w((label, a + 1)) for a in range(len(lams))]
    for x, la in enumerate(lams):
        for y, lb in enumerate(lams):
            out = out + ws[y] * ws[x].dual() * pair_char(la, lb)
    return out


def hilb_weights(lam: Partition) -> list:
    """Tangent weights of Hilb at lam as exponent pairs (e1, e2) of t1^e1 t2^e2."""
    out = []
    for i, j in lam.boxes():
        a, l = lam.arm(i, j), lam.leg(i, j)
        out.append((l, -(a + 1)))
        out.append((-(l + 1), a))
    return out


def hilb_tangent_char(lam: Partition) -> Character:
    out = Character()
    for e1, e2 in hilb_weights(lam):
        out = out + Character.t(1, e1) * Character.t(2, e2)
    return out
