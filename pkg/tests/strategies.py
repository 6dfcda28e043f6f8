from math import gcd

from hypothesis import strategies as st


@st.composite
def coprime_pairs(draw, max_p=2000):
    p = draw(st.integers(2, max_p))
    q = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return p, q


hj_string = st.lists(st.integers(-6, -2), min_size=1, max_size=5)


@st.composite
def star_records(draw):
    return {
        "central": draw(st.integers(-6, -2)),
        "arms": [draw(hj_string) for _ in range(3)],
    }
