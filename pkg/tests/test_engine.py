import random
from math import inf

import pytest

from nicholsq.engine import (
    CapTooSmall,
    GroebnerBasis,
    Order,
    Presentation,
    complete,
    dimension,
    graded_dimension_bruteforce,
    hilbert,
    ideal_membership,
    normal_form,
)
from nicholsq.scalars import Scalar

ONE = Scalar.one()
W = Scalar.omega()


def elem(*words_and_coeffs):
    out = {}
    for w, c in words_and_coeffs:
        out[w] = c
    return out


def fk3_presentation(letters="123"):
    a, b, c = letters
    rels = [
        {a * 2: ONE}, {b * 2: ONE}, {c * 2: ONE},
        {a + b: ONE, c + a: ONE, b + c: ONE},
        {b + a: ONE, a + c: ONE, c + b: ONE},
    ]
    return Presentation(letters, rels)


def test_fk3_completion():
    gb = complete(fk3_presentation(), 8)
    assert gb.certified
    assert max(len(l) for l in gb.rules) <= 3
    assert dimension(gb) == ("finite", 12)
    assert hilbert(gb, 4) == [1, 3, 4, 3, 1]


def test_single_power_relation():
    pres = Presentation("4", [{"444444": ONE}])
    gb = complete(pres, 12)
    assert len(gb.rules) == 1
    assert dimension(gb) == ("finite", 6)
    assert hilbert(gb, 5) == [1, 1, 1, 1, 1, 1]


def test_free_algebra():
    pres = Presentation("ab", [])
    gb = complete(pres, 10)
    assert len(gb.rules) == 0
    assert hilbert(gb, 5) == [1, 2, 4, 8, 16, 32]
    assert dimension(gb) == ("infinite", None)


def test_v112_presentation():
    # two letters with relations a^2, b^2, (ab + w^2 ba)^3
    def mul(x, y):
        out = {}
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                w = w1 + w2
                out[w] = out.get(w, Scalar.zero()) + c1 * c2
        return {w: c for w, c in out.items() if not c.is_zero()}

    core = {"ab": ONE, "ba": W * W}
    cube = mul(mul(core, core), core)
    pres = Presentation("ab", [{"aa": ONE}, {"bb": ONE}, cube])
    gb = complete(pres, 10)
    assert gb.certified
    assert dimension(gb) == ("finite", 12)
    assert hilbert(gb, 6) == [1, 2, 2, 2, 2, 2, 1]


def test_normal_form_properties():
    gb = complete(fk3_presentation(), 8)
    assert normal_form({"11": ONE}, gb) == {}
    # idempotence and linearity on a sample
    rng = random.Random(31)
    words = ["12", "21", "123", "321", "2313", "1212"]
    for _ in range(50):
        w1, w2 = rng.choice(words), rng.choice(words)
        e = {w1: Scalar.of(2)}
        if w2 != w1:
            e[w2] = -ONE
        nf = normal_form(e, gb)
        assert normal_form(nf, gb) == nf
    # any normal word reduces to itself
    for w in ("1", "21", "213"):
        assert normal_form({w: ONE}, gb) == {w: ONE}


def test_ideal_membership_examples():
    pres = fk3_presentation()
    assert ideal_membership({"22": ONE}, pres)
    assert not ideal_membership({"12": ONE}, pres)


def test_completion_is_deterministic_and_idempotent():
    gb1 = complete(fk3_presentation(), 8)
    gb2 = complete(fk3_presentation(), 8)
    assert gb1.sorted_leads() == gb2.sorted_leads()
    assert all(gb1.rules[l] == gb2.rules[l] for l in gb1.rules)
    # completing the completed system adds nothing
    rels = [dict({l: ONE}, **{w: -c for w, c in t.items()}) for l, t in gb1.rules.items()]
    gb3 = complete(Presentation("123", rels), 8)
    assert gb3.sorted_leads() == gb1.sorted_leads()


def test_cap_too_small():
    with pytest.raises(CapTooSmall):
        complete(Presentation("4", [{"444444": ONE}]), 3)


def test_capped_completion_reports_cap():
    # a relation set whose overlaps exceed the cap: cap at the relation degree
    pres = fk3_presentation()
    gb = complete(pres, 2)
    assert not gb.certified
    assert gb.completed_through == 2
    with pytest.raises(CapTooSmall):
        normal_form({"123": ONE}, gb)


def _alt_reduce(terms, gb):
    """Rightmost-longest reduction strategy, for confluence cross-checks."""
    terms = dict(terms)
    changed = True
    while changed:
        changed = False
        for w in sorted(terms, key=gb.order.key, reverse=True):
            c = terms[w]
            match = None
            for i in range(len(w) - 1, -1, -1):
                for L in sorted(gb.lengths, reverse=True):
                    if i + L <= len(w) and w[i:i + L] in gb.rules:
                        match = (i, w[i:i + L])
                        break
                if match:
                    break
            if match:
                i, lead = match
                del terms[w]
                for tw, tc in gb.rules[lead].items():
                    nw = w[:i] + tw + w[i + len(lead):]
                    nc = terms.get(nw, Scalar.zero()) + c * tc
                    if nc.is_zero():
                        terms.pop(nw, None)
                    else:
                        terms[nw] = nc
                changed = True
                break
    return terms


def test_confluence_at_cap_randomized():
    gb = complete(fk3_presentation(), 8)
    rng = random.Random(1234)
    for _ in range(200):
        n = rng.randrange(2, 7)
        w1 = "".join(rng.choice("123") for _ in range(n))
        w2 = "".join(rng.choice("123") for _ in range(n))
        e = {w1: Scalar.of(rng.randrange(1, 5))}
        e[w2] = e.get(w2, Scalar.zero()) + W
        e = {w: c for w, c in e.items() if not c.is_zero()}
        assert normal_form(e, gb) == _alt_reduce(e, gb)


def test_trie_count_matches_bruteforce():
    pres = fk3_presentation()
    gb = complete(pres, 8)
    series = hilbert(gb, 6)
    for d in range(7):
        assert series[d] == graded_dimension_bruteforce(pres, d)


def test_presentation_json_round_trip():
    pres = fk3_presentation()
    text = pres.to_json()
    back = Presentation.from_json(text)
    assert back.alphabet == pres.alphabet
    assert back.relations == pres.relations
    assert complete(back, 8).sorted_leads() == complete(pres, 8).sorted_leads()


def test_inhomogeneous_relation_rejected_by_default():
    with pytest.raises(ValueError):
        Presentation("ab", [{"ab": ONE, "a": ONE}])


def test_filtered_completion_with_constant_tail():
    # a^2 = 1 on one letter: dimension 2 as a filtered algebra
    pres = Presentation("a", [{"aa": ONE, "": -ONE}], require_homogeneous=False)
    gb = complete(pres, 6)
    assert gb.certified
    assert normal_form({"aaaa": ONE}, gb) == {"": ONE}
    assert dimension(gb) == ("finite", 2)


def test_order_precedence_controls_leading_words():
    rels = [{"ab": ONE, "ba": -ONE}]
    gb1 = complete(Presentation("ab", rels, precedence="ab"), 6)
    gb2 = complete(Presentation("ab", rels, precedence="ba"), 6)
    assert list(gb1.rules) == ["ba"]
    assert list(gb2.rules) == ["ab"]
