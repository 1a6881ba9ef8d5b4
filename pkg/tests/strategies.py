"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from origami.kchar import Character, canonicalize
from origami.partitions import Partition

SLOTS = [("12", 1), ("34", 1), ("13", 1)]


@st.composite
def monomials(draw, with_w=True, step=2):
    """Doubled exponents are multiples of ``step`` (2 gives integer powers)."""
    dt4 = [step * x for x in draw(st.lists(st.integers(-2, 2), min_size=4, max_size=4))]
    dw = []
    if with_w:
        for slot in draw(st.lists(st.sampled_from(SLOTS), max_size=2, unique=True)):
            dw.append((slot, step * draw(st.integers(-2, 2))))
    return canonicalize(dt4, dw)


@st.composite
def characters(draw, max_terms=4, with_w=True, step=2):
    terms = draw(st.lists(st.tuples(monomials(with_w, step), st.integers(-3, 3)), max_size=max_terms))
    out = {}
    for m, c in terms:
        out[m] = out.get(m, 0) + c
    return Character(out)


@st.composite
def partitions(draw, max_size=8):
    n = draw(st.integers(0, max_size))
    parts = []
    rest, cap = n, n
    while rest:
        p = draw(st.integers(1, min(rest, cap)))
        parts.append(p)
        rest -= p
        cap = p
    return Partition(parts)
