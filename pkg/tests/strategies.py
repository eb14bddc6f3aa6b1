"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from src.fuzzy import Breakpoint, FuzzySet, Interval, IntervalSet, MembershipCurve, Universe
from src.logic import And, Const, Implies, Not, Or, Var

UNIVERSE = Universe(0.0, 10.0)
WIDE_UNIVERSE = Universe(0.0, 50.0)

degrees = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def fuzzy_sets(draw, max_knots=6, jumps=True):
    """Random piecewise-linear sets on [0, 10] with knots on a 0.1 grid."""
    xs = sorted(draw(st.lists(st.integers(0, 100), min_size=1, max_size=max_knots, unique=True)))
    breakpoints = []
    for x in xs:
        left = draw(degrees)
        right = draw(degrees) if jumps and draw(st.booleans()) else left
        breakpoints.append(Breakpoint(x / 10, left, right))
    return FuzzySet(UNIVERSE, MembershipCurve(tuple(breakpoints)))


@st.composite
def interval_sets(draw):
    """
    Random unions of disjoint intervals with integer ends in [0, 50].

    Ends are distinct, so each interval is non-degenerate and may be open,
    half-open or closed.
    """
    ends = sorted(draw(st.lists(st.integers(0, 50), max_size=8, unique=True)))
    if len(ends) % 2:
        ends = ends[:-1]
    intervals = tuple(
        Interval(a, b, draw(st.booleans()), draw(st.booleans()))
        for a, b in zip(ends[::2], ends[1::2])
    )
    return IntervalSet(WIDE_UNIVERSE, intervals)


names = st.sampled_from(["p", "q", "r", "s"])
literals = st.sampled_from([0.0, 0.25, 0.5, 1.0])

formulas = st.recursive(
    st.one_of(names.map(Var), literals.map(Const)),
    lambda children: st.one_of(
        children.map(Not),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    ),
    max_leaves=12,
)

variable_formulas = st.recursive(
    names.map(Var),
    lambda children: st.one_of(
        children.map(Not),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    ),
    max_leaves=10,
)

monotone_formulas = st.recursive(
    st.one_of(names.map(Var), literals.map(Const)),
    lambda children: st.one_of(
        st.builds(And, children, children),
        st.builds(Or, children, children),
    ),
    max_leaves=10,
)
