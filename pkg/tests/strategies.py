"""Hypothesis strategies for random spaces and subsets.

Random topologies are built from random preorders: draw a relation, close
it transitively, and take the up-sets.  Every draw is a valid topology, so
no example is ever discarded.
"""

from hypothesis import strategies as st

from fintopo import FiniteSpace, PointSet


@st.composite
def spaces(draw, max_points=5):
    n = draw(st.integers(1, max_points))
    bits = draw(st.integers(0, (1 << (n * n)) - 1))
    le = [[i == j or bool(bits >> (i * n + j) & 1) for j in range(n)]
          for i in range(n)]
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    opens = []
    for mask in range(1 << n):
        up = True
        for i in range(n):
            if mask >> i & 1:
                for j in range(n):
                    if le[i][j] and not mask >> j & 1:
                        up = False
                        break
            if not up:
                break
        if up:
            opens.append(mask)
    return FiniteSpace(n, tuple(opens))


@st.composite
def space_and_subset(draw, max_points=5):
    space = draw(spaces(max_points))
    mask = draw(st.integers(0, (1 << space.size) - 1))
    return space, PointSet(mask, space.size)


@st.composite
def space_and_two_subsets(draw, max_points=5):
    space = draw(spaces(max_points))
    top = (1 << space.size) - 1
    a = draw(st.integers(0, top))
    b = draw(st.integers(0, top))
    return space, PointSet(a, space.size), PointSet(b, space.size)
