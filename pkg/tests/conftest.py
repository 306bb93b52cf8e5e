import hypothesis.strategies as st
from hypothesis import settings

from braidlab.braid import BraidWord
from braidlab.words import Word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def words(rank=3, max_len=8):
    letter = st.tuples(st.integers(1, rank), st.sampled_from([-2, -1, 1, 2]))
    return st.lists(letter, max_size=max_len).map(Word)


def braids(n=3, max_len=6):
    letter = st.tuples(st.integers(1, n - 1).map(lambda i: ("s", i)), st.sampled_from([-1, 1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, ls))


def pure_braids(n=3, max_len=6):
    pairs = [(r, s) for s in range(2, n + 1) for r in range(1, s)]
    letter = st.tuples(st.sampled_from(pairs).map(lambda p: ("A",) + p), st.sampled_from([-1, 1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, ls))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
