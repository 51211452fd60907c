import math
import sys

from hypothesis import settings, strategies as st

from friezes.field import get_context

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def elements(L, bound=20):
    ctx = get_context(L)
    return st.lists(st.integers(-bound, bound), min_size=ctx.degree, max_size=ctx.degree).map(ctx.element)


def lam(q):
    return 2 * math.cos(math.pi / q)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
