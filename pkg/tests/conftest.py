import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from nfacomp import core

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@st.composite
def nfas(draw, max_states=5, max_syms=2, alphabet=None):
    if alphabet is None:
        k = draw(st.integers(1, max_syms))
        alphabet = tuple("abc"[:k])
    n = draw(st.integers(1, max_states))
    syms = st.sampled_from(alphabet)
    qs = st.integers(0, n - 1)
    trans = draw(st.lists(st.tuples(qs, syms, qs), max_size=2 * n * len(alphabet), unique=True))
    initial = draw(st.sets(qs, min_size=1, max_size=n))
    final = draw(st.sets(qs, max_size=n))
    return core.Nfa.build(alphabet, n, trans, initial, final)


@st.composite
def nfa_pairs(draw, max_states=5, max_syms=2):
    k = draw(st.integers(1, max_syms))
    alphabet = tuple("abc"[:k])
    return (
        draw(nfas(max_states=max_states, alphabet=alphabet)),
        draw(nfas(max_states=max_states, alphabet=alphabet)),
    )


@st.composite
def port_nfas(draw, max_states=5, max_syms=2, num_entry=2, num_exit=2):
    k = draw(st.integers(1, max_syms))
    alphabet = tuple("abc"[:k])
    n = draw(st.integers(1, max_states))
    syms = st.sampled_from(alphabet)
    qs = st.integers(0, n - 1)
    trans = draw(st.lists(st.tuples(qs, syms, qs), max_size=2 * n * len(alphabet), unique=True))
    ports = st.sets(qs, max_size=n)
    entry = [draw(ports) for _ in range(num_entry)]
    exit_ = [draw(ports) for _ in range(num_exit)]
    return core.PortNfa.build(alphabet, n, trans, entry, exit_)
