from __future__ import annotations

from hypothesis import settings, strategies as st

from bzcalc.combinatorics import Partition, PermutationWord
from bzcalc.cosets import YoungSubdiagram

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def permutations_st(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    return PermutationWord(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def partitions_st(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    parts, rest = [], n
    while rest:
        p = draw(st.integers(1, min(rest, parts[-1] if parts else rest)))
        parts.append(p)
        rest -= p
    return Partition(tuple(parts))


@st.composite
def subdiagrams_st(draw, max_side=6):
    n1 = draw(st.integers(0, max_side))
    n2 = draw(st.integers(0, max_side))
    k = sorted(draw(st.lists(st.integers(0, n1), min_size=n2, max_size=n2)))
    return YoungSubdiagram(tuple(k), n1, n2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
