import pytest
from hypothesis import given, settings, strategies as st

from berk.berkline import BPoint, GDisc, closed_disc, disc_eq, disc_subset, in_disc
from berk.errors import SearchFailed
from berk.field import FieldSpec
from berk.moebius import Moebius, inverse
from berk import schottky as sk

Q5 = FieldSpec("exact_q", 5)
TATE = Moebius(25, 0, 0, 1, Q5)
TATE_FIG = sk.Figure([closed_disc(Q5(0), 1)], [GDisc(Q5(0), -1, True, True)])


def test_word_enumeration():
    assert list(sk.enumerate_words(1, 2)) == [((0, 1),), ((0, -1),), ((0, 1), (0, 1)), ((0, -1), (0, -1))]
    assert len(sk.words_of_length(2, 2)) == 12
    assert len(sk.words_of_length(3, 3)) == 150
    ws = list(sk.enumerate_words(2, 3))
    assert ws == sorted(ws, key=sk.word_key)


def test_word_text():
    w = sk.parse_word("g1*g2^-1*g1")
    assert w == ((0, 1), (1, -1), (0, 1))
    assert sk.word_str(w) == "g1*g2^-1*g1"
    assert sk.parse_word("g1^2*g1^-1") == ((0, 1),)
    assert sk.word_str(()) == "id"


def test_tate_figure():
    rep = sk.verify_figure([TATE], TATE_FIG)
    assert rep.ok, rep.violations
    big = sk.Figure([closed_disc(Q5(0), -1)], TATE_FIG.plus_inv)
    rep = sk.verify_figure([TATE], big)
    assert not rep.ok
    assert any("intersect" in v for v in rep.violations)


def test_find_figure_tate_after_conjugation():
    s = Moebius(1, 2, 1, 3, Q5)
    conj = s @ TATE @ inverse(s)
    fig = sk.find_figure([conj], grid=[1])
    assert sk.verify_figure([conj], fig).ok
    fig = sk.find_figure([TATE])
    assert sk.verify_figure([TATE], fig).ok


def test_duplicate_generators_fail():
    s = Moebius(1, 2, 1, 3, Q5)
    g = s @ TATE @ inverse(s)
    with pytest.raises(SearchFailed):
        sk.find_figure([g, g])


def test_word_disc_of_a_letter(groups):
    G, fig = groups["hyperelliptic7"]
    for l in sk.letters(2):
        assert disc_eq(sk.word_disc((l,), G.gens, fig), fig.disc(l))


def test_tate_limit_cover():
    for n in range(6):
        cover = sk.limit_cover([TATE], TATE_FIG, n)
        assert len(cover) == 2
        (_, d0), (_, d1) = cover
        assert in_disc(BPoint(Q5(0)), d0) and in_disc(BPoint.infinity(), d1)


def test_fixed_point():
    assert sk.fixed_point_of_word(((0, 1),), [TATE]) == Q5(0)
    assert sk.fixed_point_of_word(((0, -1),), [TATE]) is None


def test_express_examples(groups):
    G, fig = groups["hyperelliptic7"]
    w = sk.parse_word("g1*g2^-1*g1")
    assert sk.express_in_group(sk.word_matrix(w, G.gens), G.gens, fig).word == w
    assert sk.express_in_group(Moebius.identity(G.spec), G.gens, fig).kind == "identity"
    assert sk.express_in_group(G.extras["c"], G.gens, fig).kind == "not_in_group"


def test_normalizer(groups):
    G, fig = groups["hyperelliptic7"]
    for name in "abc":
        assert sk.normalizes(G.extras[name], G.gens, fig)
    assert not sk.normalizes(Moebius(1, 1, 0, 1, Q5), [TATE], TATE_FIG)


def test_tate_skeleta():
    fund = sk.fundamental_skeleton([TATE], TATE_FIG)
    assert len(fund.vertices) == 2 and len(fund.edges) == 1
    assert fund.edges[0][2] == 2
    q = sk.quotient_skeleton([TATE], TATE_FIG)
    assert len(q.vertices) == 1
    (u, v, L), = q.edges
    assert u == v and L == 2
    assert sk.genus([TATE], TATE_FIG) == 1


def test_hyperelliptic_skeleta(groups):
    G, fig = groups["hyperelliptic7"]
    fund = sk.fundamental_skeleton(G.gens, fig)
    leaves = [v for v in fund.vertex_ids() if fund.degree(v) == 1]
    assert len(leaves) == 4
    assert sorted(set(fund.vertex_ids()) - set(leaves)) == ["x1", "x2"]
    assert fund.betti() == 0
    q = sk.quotient_skeleton(G.gens, fig)
    assert len(q.vertices) == 2 and len(q.edges) == 3
    assert len({L for _, _, L in q.edges}) == 1
    assert sk.genus(G.gens, fig) == 2


def test_genus3(groups):
    G, fig = groups["genus3_p5"]
    assert sk.quotient_skeleton(G.gens, fig).betti() == 3
    assert sk.genus(G.gens, fig) == 3


def test_asm_figure(groups):
    G, fig = groups["asm_fpt"]
    assert sk.verify_figure(G.gens, fig).ok
    assert sk.genus(G.gens, fig) == 4


def test_metric_graph_suppression():
    g = sk.MetricGraph([("a", None), ("m", None), ("b", None)], [("a", "m", 1), ("m", "b", 2)])
    s = g.suppress_degree_two()
    assert s.vertex_ids() == ["a", "b"] and s.edges[0][2] == 3


def test_radius_profile_matches_enumeration(groups):
    for name, (G, fig) in groups.items():
        cg, cf = sk._in_chart(G.gens, fig)
        assert sk.radius_profile(G.gens, fig, 4) == sk._radius_profile_enum(cg, cf, 4), name


@st.composite
def reduced_words(draw, g, lo=1, hi=5):
    n = draw(st.integers(lo, hi))
    w = []
    while len(w) < n:
        l = draw(st.sampled_from(sk.letters(g)))
        if w and w[-1] == (l[0], -l[1]):
            continue
        w.append(l)
    return tuple(w)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_nesting_property(groups, data):
    G, fig = groups["hyperelliptic7"]
    v = data.draw(reduced_words(2, 1, 3))
    w = data.draw(reduced_words(2, 1, 3))
    if v[-1] == (w[0][0], -w[0][1]):
        return
    assert disc_subset(sk.word_disc(v + w, G.gens, fig), sk.word_disc(v, G.gens, fig))


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_express_roundtrip_property(groups, data):
    G, fig = groups["genus3_p5"]
    w = data.draw(reduced_words(3, 0, 7))
    r = sk.express_in_group(sk.word_matrix(w, G.gens), G.gens, fig)
    assert (r.word or ()) == w
