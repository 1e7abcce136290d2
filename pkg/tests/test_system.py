import random

import pytest
from hypothesis import given, settings, strategies as st

from qlinset.interval import Interval
from qlinset.linalg import add_vec, dual_mat, dual_vec, hadamard, mat_vec, mid_mat, mid_vec, rad_mat, rad_vec
from qlinset.selftest import random_point, random_system
from qlinset.system import (
    ParamRef,
    QuantIntervalSystem,
    build_derived,
    classify_prefix,
    default_prefix,
    flip_quantifiers,
    negate_system,
)

INF = float("inf")

seeds = st.integers(0, 2**32 - 1)


def gen(seed):
    rng = random.Random(seed)
    return rng, random_system(rng, rng.randint(1, 3), rng.randint(1, 3))


class TestBuildDerived:
    def test_exists_a_forall_b_eq(self):
        s = QuantIntervalSystem([[(1, 2)]], [(3, 4)], [["exists"]], ["forall"], ["eq"])
        d = build_derived(s)
        assert d.Ac == ((Interval(2, 1),),)
        assert d.bc == (Interval(4, 3),)
        assert d.As == ((1,),) and d.bs == (-1,)
        assert d.w == (Interval(0, 0),) and d.u == (0,) and d.v == (0,)

    def test_forall_a_exists_b_ge(self):
        s = QuantIntervalSystem([[(1, 2)]], [(3, 4)], [["forall"]], ["exists"], ["ge"])
        d = build_derived(s)
        assert d.Ac == ((Interval(1, 2),),) and d.bc == (Interval(3, 4),)
        assert d.u == (0,) and d.v == (INF,) and d.w == (Interval(0, INF),)

    def test_le_slacks(self):
        s = QuantIntervalSystem([[(1, 2)]], [(3, 4)], [["E"]], ["E"], ["le"])
        d = build_derived(s)
        assert d.u == (-INF,) and d.v == (0,) and d.w == (Interval(-INF, 0),)

    def test_split(self):
        s = QuantIntervalSystem([[(1, 2), (3, 4)]], [(0, 1)], [["A", "E"]], ["E"], ["eq"])
        d = build_derived(s)
        assert d.Afa == ((Interval(1, 2), Interval(0, 0)),)
        assert d.Aex == ((Interval(0, 0), Interval(3, 4)),)
        assert d.bfa == (Interval(0, 0),) and d.bex == (Interval(0, 1),)

    @given(seeds)
    def test_invariants(self, seed):
        rng, s = gen(seed)
        d = build_derived(s)
        for rf, re_, r in zip(d.Afa, d.Aex, s.A):
            assert add_vec(rf, re_) == r
        # characteristic identities
        assert mid_mat(d.Ac) == mid_mat(s.A)
        assert rad_mat(d.Ac) == tuple(tuple(-v for v in r) for r in hadamard(d.As, rad_mat(s.A)))
        assert mid_vec(d.bc) == mid_vec(s.b)
        assert rad_vec(d.bc) == tuple(p * q for p, q in zip(d.bs, rad_vec(s.b)))
        # endpoint forms
        x = random_point(rng, s.n)
        assert mat_vec(d.Ac, x) == add_vec(mat_vec(d.Afa, x), mat_vec(dual_mat(d.Aex), x))
        assert d.bc == add_vec(dual_vec(d.bfa), d.bex)
        assert all(v in (1, -1) for r in d.As for v in r)

    @given(seeds)
    def test_flip_dualizes(self, seed):
        _, s = gen(seed)
        d, f = build_derived(s), build_derived(flip_quantifiers(s))
        assert f.Ac == dual_mat(d.Ac) and f.bc == dual_vec(d.bc)


def one_row(prefix, sigma):
    return QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["A"]], ["E"], [sigma], prefix=prefix)


class TestPrefix:
    def test_classify(self):
        assert classify_prefix(one_row(["a_1_1", "b_1"], "eq")) == (True, True, True)
        assert classify_prefix(one_row(["b_1", "a_1_1"], "eq")) == (False, False, False)
        assert classify_prefix(one_row(["b_1", "a_1_1"], "ge")) == (False, False, True)

    def test_rowwise_but_not_global(self):
        s = QuantIntervalSystem([[(1, 2)], [(1, 2)]], [(0, 1), (0, 1)],
                                [["A"], ["A"]], ["E", "E"], ["eq", "eq"],
                                prefix=["a_1_1", "b_1", "a_2_1", "b_2"])
        assert classify_prefix(s) == (False, True, True)

    def test_default_prefix_examples(self):
        s = QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["E"]], ["A"], ["eq"])
        assert default_prefix(s) == (ParamRef("b", 0), ParamRef("a", 0, 0))
        s = QuantIntervalSystem([[(1, 2)], [(1, 2)]], [(0, 1), (0, 1)], [["A"], ["A"]],
                                ["A", "A"], ["eq", "eq"])
        assert [p.name for p in default_prefix(s)] == ["a_1_1", "b_1", "a_2_1", "b_2"]
        s = QuantIntervalSystem([[(1, 2), (1, 2)]], [(0, 1)], [["E", "A"]], ["E"], ["eq"])
        assert [p.name for p in default_prefix(s)] == ["a_1_2", "a_1_1", "b_1"]

    @given(seeds)
    def test_default_prefix_in_qsigma(self, seed):
        _, s = gen(seed)
        assert classify_prefix(s.replace(prefix=default_prefix(s))).is_qsigma
        assert classify_prefix(s.replace(prefix=default_prefix(s))).is_rowwise_ae

    def test_missing_prefix_defaults(self):
        s = QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["E"]], ["A"], ["eq"])
        assert s.prefix == default_prefix(s)

    def test_bad_prefix(self):
        with pytest.raises(ValueError, match="exactly once"):
            one_row(["a_1_1"], "eq")
        with pytest.raises(ValueError, match="exactly once"):
            one_row(["a_1_1", "a_1_1"], "eq")

    def test_param_names(self):
        assert ParamRef.parse("a_2_3") == ParamRef("a", 1, 2)
        assert ParamRef("b", 4).name == "b_5"
        with pytest.raises(ValueError):
            ParamRef.parse("c_1")


class TestValidation:
    def test_improper_data_rejected(self):
        with pytest.raises(ValueError, match="proper"):
            QuantIntervalSystem([[(2, 1)]], [(0, 1)], [["A"]], ["E"], ["eq"])

    def test_infinite_data_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            QuantIntervalSystem([[(0, INF)]], [(0, 1)], [["A"]], ["E"], ["eq"])

    def test_shape_checks(self):
        with pytest.raises(ValueError):
            QuantIntervalSystem([[(1, 2)]], [(0, 1), (0, 1)], [["A"]], ["E"], ["eq"])
        with pytest.raises(ValueError):
            QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["A", "E"]], ["E"], ["eq"])

    def test_unknown_tokens(self):
        with pytest.raises(ValueError):
            QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["some"]], ["E"], ["eq"])
        with pytest.raises(ValueError):
            QuantIntervalSystem([[(1, 2)]], [(0, 1)], [["A"]], ["E"], ["lt"])


class TestNegate:
    def test_example(self):
        s = QuantIntervalSystem([[(1, 2)]], [(3, 4)], [["A"]], ["E"], ["ge"])
        n = negate_system(s)
        assert n.A == ((Interval(-2, -1),),) and n.b == (Interval(-4, -3),)
        assert n.prefix == s.prefix and n.sigma == s.sigma

    def test_involution_and_symmetric(self):
        s = QuantIntervalSystem([[(-1, 1)]], [(3, 4)], [["A"]], ["E"], ["ge"])
        assert negate_system(negate_system(s)) == s
        assert negate_system(s).A == s.A

    @settings(max_examples=50)
    @given(seeds)
    def test_involution_random(self, seed):
        _, s = gen(seed)
        assert negate_system(negate_system(s)) == s
