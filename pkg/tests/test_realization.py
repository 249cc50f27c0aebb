import itertools
import random

import pytest

from nicholsq.realization import (
    EnvelopingGroup,
    FiniteQuotientGroup,
    InfiniteGroup,
    PrincipalRealization,
    finite_realization,
    fk3_lambda_predicates,
    fk3_realization_s3,
    gamma3_realization,
    lambda_support_predicates,
    symmetric_group_3,
)
from nicholsq.racks import hv1_rack_and_cocycle
from nicholsq.scalars import Scalar, Specialization


GAMMA = (0, 1, 0)
NU = (1, 0, 0)
ZETA = (0, 0, 1)


def test_gamma_nu_exchange():
    grp = EnvelopingGroup()
    # gamma * nu = nu^2 * gamma
    assert grp.mul(GAMMA, NU) == (2, 1, 0)


def test_gamma_squared_is_central_on_nu():
    grp = EnvelopingGroup()
    g2 = grp.mul(GAMMA, GAMMA)
    lhs = grp.mul(g2, grp.mul(NU, grp.mul(grp.inv(g2), grp.inv(NU))))
    assert lhs == grp.identity


def test_exchange_relation_g1g2_equals_g3g1():
    r = gamma3_realization()
    grp = r.group
    assert grp.mul(r.g[1], r.g[2]) == grp.mul(r.g[3], r.g[1])


def test_associativity_exhaustive_small_quotient():
    grp = FiniteQuotientGroup(6, 6)
    elems = list(grp.elements())
    rng = random.Random(3)
    triples = [tuple(rng.choice(elems) for _ in range(3)) for _ in range(4000)]
    # exhaustive would be 108^3; randomized deterministic sample instead
    for x, y, z in triples:
        assert grp.mul(grp.mul(x, y), z) == grp.mul(x, grp.mul(y, z))
    for x in elems:
        assert grp.mul(x, grp.inv(x)) == grp.identity


def test_gamma3_realization_validates():
    r = gamma3_realization()
    ok, witness = r.validate()
    assert ok, witness


def test_finite_realization_validates_small():
    r = finite_realization(6, 6)
    ok, witness = r.validate()
    assert ok, witness


def test_finite_realization_validates_default():
    r = finite_realization(24, 12)
    ok, witness = r.validate()
    assert ok, witness


def test_broken_realization_reports_violation():
    grp = EnvelopingGroup()
    rack, cocycle = hv1_rack_and_cocycle()
    # g4 := gamma is not central
    g_map = {1: (0, 1, 0), 2: (2, 1, 0), 3: (1, 1, 0), 4: (0, 1, 0)}
    r = PrincipalRealization(grp, g_map, rack, cocycle)
    ok, witness = r.validate()
    assert not ok
    assert witness[0] in ("conjugation-vs-rack", "g4-not-central", "yd-compat")


def test_act_examples():
    r = gamma3_realization()
    # g1 . 2 = 3 with value -1
    assert r.act(r.g[1], 2) == (3, -Scalar.one())
    # g4 . i = i with value q2 for the triangle letters
    for i in (1, 2, 3):
        assert r.act(r.g[4], i) == (i, Scalar.q2())
    # identity
    for i in (1, 2, 3, 4):
        assert r.act(r.group.identity, i) == (i, Scalar.one())
    # chi on generator elements agrees with the stored table even though
    # evaluation goes through word decomposition
    for i in (1, 2, 3, 4):
        for j in (1, 2, 3, 4):
            assert r.chi(i, r.g[j]) == r.chi_values[i][j]


def test_cocycle_law_exhaustive_on_small_quotient():
    r = finite_realization(6, 6)
    grp = r.group
    elems = list(grp.elements())
    for h, t in itertools.product(elems, repeat=2):
        ht = grp.mul(h, t)
        for i in (1, 2, 3, 4):
            ti, chit = r.act(t, i)
            _, chih = r.act(h, ti)
            assert r.chi(i, ht) == chit * chih


def test_action_letter_part_is_group_action():
    r = finite_realization(6, 6)
    grp = r.group
    rng = random.Random(17)
    elems = list(grp.elements())
    for _ in range(500):
        g = rng.choice(elems)
        h = rng.choice(elems)
        for i in (1, 2, 3, 4):
            assert r.act_letter(grp.mul(g, h), i) == r.act_letter(g, r.act_letter(h, i))


def test_lambda_predicates_on_default_model():
    r = finite_realization(24, 12)
    assert lambda_support_predicates(r) == (True, True, True, True)


def test_lambda_predicates_small_quotient_forbids_top_slots():
    # M = 6 makes g4^6 = 1, killing slots 3 and 4
    r = finite_realization(6, 6)
    assert lambda_support_predicates(r) == (True, True, False, False)


def test_lambda_predicates_symbolic_all_forbidden():
    r = gamma3_realization()
    assert lambda_support_predicates(r) == (False, False, False, False)


def test_fk3_realization_over_s3():
    r = fk3_realization_s3()
    ok, witness = r.validate()
    assert ok, witness
    # transpositions are involutions: slot 1 forbidden; slot 2 allowed
    assert fk3_lambda_predicates(r) == (False, True)


def test_s3_group_table():
    grp = symmetric_group_3()
    assert grp.size == 6
    elems = list(grp.elements())
    for x in elems:
        assert grp.mul(x, grp.inv(x)) == grp.identity


def test_describe_is_json_friendly():
    import json

    r = finite_realization(6, 12)
    data = r.describe()
    assert json.loads(json.dumps(data)) == data
    assert data["group"] == {"kind": "env-quotient", "N": 6, "M": 12}
