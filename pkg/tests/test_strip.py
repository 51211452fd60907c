import pytest
from hypothesis import given, strategies as st

from corpus import strip_grid
from friezes.dissection import all_entries, build_dissection
from friezes.errors import (
    InvalidArgument,
    InvalidStripError,
    NotAnInfiniteFriezeError,
    NotRealizableError,
    SpanTooSmall,
)
from friezes.field import embed_lambda, get_context
from friezes.frieze import FriezePattern, to_dissection, verify
from friezes.strip import (
    InfiniteFriezeView,
    PeriodicQuiddity,
    StripAngulation,
    extract_finite,
    from_strip,
    is_infinite_frieze,
    positivity_check,
    strip_quiddity,
    theta_arcs,
    to_strip,
    validate_strip,
    vertex_report,
)


def view(p, word):
    return InfiniteFriezeView(PeriodicQuiddity(p, tuple(word)))


def r2():
    return get_context(4).gen


@pytest.fixture(scope="module")
def grid():
    out = []
    for q in strip_grid():
        v = InfiniteFriezeView(q)
        out.append((v, is_infinite_frieze(v, 4 * q.T * q.p)))
    return out


# -- quiddity and entries ------------------------------------------------------------------


def test_quiddity_validation():
    with pytest.raises(InvalidArgument):
        PeriodicQuiddity(4, (0, 1))
    with pytest.raises(InvalidArgument):
        PeriodicQuiddity(2, (1,))
    with pytest.raises(InvalidArgument):
        PeriodicQuiddity(4, ())


def test_constant_two_sqrt2():
    v = view(4, [2])
    s = r2()
    assert v.entry(0, 2) == 2 * s
    assert v.entry(0, 3) == 7
    assert v.entry(0, 4) == 12 * s
    assert v.entry(0, 5) == 41
    assert v.entry(0, 6) == 70 * s
    assert v.entry(0, 7) == 239
    assert v.entry(3, 10) == 239


def test_alternating_rows():
    v = view(4, [2, 1])
    s = r2()
    assert [v.entry(i, i + 2) for i in range(2)] == [s, 2 * s]
    assert [v.entry(i, i + 3) for i in range(2)] == [3, 3]
    assert sorted([v.entry(i, i + 4) for i in range(2)], key=float) == [2 * s, 4 * s]
    assert [v.entry(i, i + 5) for i in range(2)] == [5, 5]
    assert sorted([v.entry(i, i + 6) for i in range(2)], key=float) == [3 * s, 6 * s]
    assert [v.entry(i, i + 7) for i in range(2)] == [7, 7]
    assert sorted([v.entry(i, i + 8) for i in range(2)], key=float) == [4 * s, 8 * s]


def test_bottom_row_and_periodicity():
    v = view(5, [1, 3, 2])
    for i in range(-7, 7):
        assert v.entry(i, i + 1) == 1
        assert v.entry(i, i) == 0
        assert v.entry(i, i + 9) == v.entry(i + 3, i + 12)


def test_entry_rejects_reversed_index():
    with pytest.raises(InvalidArgument):
        view(4, [2]).entry(3, 1)


@given(st.integers(3, 8), st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_unimodular_rule_on_any_propagation_array(p, word):
    v = view(p, word)
    for i in range(len(word)):
        for j in range(i + 1, i + 16):
            assert v.entry(i, j) * v.entry(i + 1, j + 1) - v.entry(i, j + 1) * v.entry(i + 1, j) == 1


@given(st.integers(3, 7), st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_infinite_ptolemy(p, word, data):
    v = view(p, word)
    i = data.draw(st.integers(0, len(word) - 1))
    j = data.draw(st.integers(i, i + 6))
    k = data.draw(st.integers(j, j + 6))
    l = data.draw(st.integers(k, k + 6))
    e = v.entry
    assert e(i, k) * e(j, l) == e(i, l) * e(j, k) + e(i, j) * e(k, l)


# -- positivity --------------------------------------------------------------------------------


@pytest.mark.parametrize("p", range(3, 9))
def test_constant_two_lambda_is_frieze(p):
    rep = positivity_check(view(p, [2]), 40)
    assert rep.ok and rep.height_checked == 40


def test_constant_sqrt2_fails_at_row_four():
    with pytest.raises(NotAnInfiniteFriezeError) as exc:
        positivity_check(view(4, [1]))
    assert exc.value.location == (0, 4)
    assert exc.value.report.kind == "nonpositive"
    assert exc.value.report.value == 0


def test_constant_one_fails_for_triangles():
    with pytest.raises(NotAnInfiniteFriezeError) as exc:
        positivity_check(view(3, [1]))
    assert exc.value.location == (0, 3)


class _Injected(InfiniteFriezeView):
    """A view with one entry overridden, to drive the bound branch."""

    def __init__(self, quiddity, spot, value):
        super().__init__(quiddity)
        self._spot, self._value = spot, value

    def entry(self, i, j):
        if (i, j) == self._spot:
            return self._value
        return super().entry(i, j)


def test_bound_rejection_is_reported():
    q = PeriodicQuiddity(5, (2,))
    phi = get_context(5).gen
    positivity_check(_Injected(q, (0, 4), q.ctx.one), 6)
    v = _Injected(q, (0, 4), phi - 1)
    with pytest.raises(NotAnInfiniteFriezeError) as exc:
        positivity_check(v, 6)
    assert exc.value.report.kind == "below lambda_p"
    assert exc.value.location == (0, 4)


def test_row_bound_validation():
    with pytest.raises(InvalidArgument):
        positivity_check(view(4, [2]), 1)


# -- theta and vertex reports --------------------------------------------------------------------


def test_theta_empty_for_examples():
    assert theta_arcs(view(4, [2])) == frozenset()
    assert theta_arcs(view(4, [2, 1])) == frozenset()


def test_theta_triangles():
    assert theta_arcs(view(3, [1, 4, 1, 4])) == frozenset({(1, 3), (3, 5)})


def test_vertex_reports():
    v = view(4, [2])
    rep = vertex_report(v, frozenset(), 0)
    assert (rep.defect, rep.saturated, rep.arcs_attached) == (1, False, 0)
    v = view(4, [2, 1])
    assert vertex_report(v, frozenset(), 0).defect == 1
    assert vertex_report(v, frozenset(), 1).defect == 0


def test_saturated_vertex_has_no_defect():
    v = view(3, [1, 4, 1, 4])
    th = theta_arcs(v)
    rep = vertex_report(v, th, 2)
    assert rep.saturated and rep.defect == 0


def test_span_too_small():
    v = view(3, [1, 2])
    with pytest.raises(SpanTooSmall):
        vertex_report(v, frozenset({(0, 2), (0, 3), (1, 3)}), 0)


# -- strips ---------------------------------------------------------------------------------------


def test_ladder():
    s = to_strip(view(4, [2]))
    assert s.peripheral == frozenset()
    assert s.bridging == ((0, 0),)
    assert s.upper_advance == 1
    assert strip_quiddity(s).multiples == (2,)


def test_fan():
    s = to_strip(view(4, [2, 1]))
    assert s.peripheral == frozenset()
    assert s.bridging == ((0, 0),)
    assert s.upper_advance == 0
    quid, window = from_strip(s, 8)
    assert quid.multiples == (2, 1)
    assert window[(0, 3)] == 3 and window[(1, 8)] == 7


def test_from_strip_ladder_window():
    s = StripAngulation(4, 1, frozenset(), ((0, 0),), 1)
    quid, window = from_strip(s, 7)
    assert quid.multiples == (2,)
    assert window[(0, 3)] == 7 and window[(0, 7)] == 239


def test_strip_without_arcs_is_invalid():
    with pytest.raises(InvalidStripError):
        validate_strip(StripAngulation(4, 1, frozenset(), (), 0))


def test_strip_with_wrong_cells():
    with pytest.raises(InvalidStripError):
        strip_quiddity(StripAngulation(4, 1, frozenset(), ((0, 0),), 2))
    with pytest.raises(InvalidStripError):
        strip_quiddity(StripAngulation(4, 2, frozenset({(0, 3)}), ((0, 0),), 1))


def test_not_realizable_when_span_too_short():
    v = view(3, [6, 1, 3, 1])
    with pytest.raises(NotRealizableError):
        to_strip(v, 2)
    s = to_strip(v)
    assert s.peripheral == frozenset({(0, 2), (0, 4), (2, 4)})
    assert s.upper_advance == 0


def test_strip_json_shape():
    s = to_strip(view(4, [2]))
    assert s.to_json() == {"p": 4, "period": 1, "peripheral": [], "bridging": [[0, 0]], "upper_advance": 1}


def test_grid_round_trip(grid):
    passing = 0
    for v, ok in grid:
        if not ok:
            continue
        passing += 1
        s = to_strip(v)
        quid, window = from_strip(s)
        assert quid == v.quiddity
        assert all(window[k] == v.entry(*k) for k in window)
    assert passing == 119


def test_grid_non_saturated_recur(grid):
    for v, ok in grid:
        if ok:
            th = theta_arcs(v)
            assert any(not vertex_report(v, th, b).saturated for b in range(v.T))


def test_grid_entry_bounds(grid):
    for v, ok in grid:
        if ok:
            lam = embed_lambda(v.p, v.ctx)
            for x in v.window(4 * v.T * v.p).values():
                assert x == 1 or (x - lam).sign() >= 0


def test_grid_rows_for_four_and_six(grid):
    for v, ok in grid:
        if ok and v.p in (4, 6):
            for (i, j), x in v.window(4 * v.T * v.p).items():
                r = j - i
                if r % 2:
                    assert x.is_integer() and x.coeffs[0] > 0
                else:
                    assert x.coeffs[0] == 0 and x.coeffs[1] > 0


# -- finite pieces ------------------------------------------------------------------------------


def test_extract_finite_under_arcs():
    for q in strip_grid(ps=(3, 4)):
        v = InfiniteFriezeView(q)
        if not is_infinite_frieze(v):
            continue
        for arc in theta_arcs(v):
            f = extract_finite(v, arc)
            assert verify(f).ok
            to_dissection(f)


def test_extract_pentagon():
    # a triangulated pentagon sits under the arc (0,4)
    v = view(3, [6, 1, 3, 1])
    assert is_infinite_frieze(v)
    assert (0, 4) in theta_arcs(v)
    f = extract_finite(v, (0, 4))
    assert f.quiddity == [2, 1, 3, 1, 2]
    d = to_dissection(f)
    assert d.diagonals == {(0, 2), (2, 4)}
    assert FriezePattern.from_entry_table(all_entries(d)) == f
    for a in range(5):
        for b in range(a + 1, 5):
            assert f.entry(a, b) == v.entry(a, b)


def test_extract_degenerate_triangle():
    v = view(3, [1, 4, 1, 4])
    f = extract_finite(v, (1, 3))
    assert f.n == 3 and all(x == 1 for x in f.row(1) + f.row(2))


def test_extract_requires_one():
    with pytest.raises(InvalidArgument):
        extract_finite(view(4, [2]), (0, 3))


def test_render_window():
    text = view(4, [2]).render(4)
    lines = text.splitlines()
    assert [ln.split()[0] for ln in lines] == ["12√2", "7", "2√2", "1"]
