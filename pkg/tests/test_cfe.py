import itertools
import math
import random

import pytest

from conftest import random_surd
from cuntzfrac import (
    ParseError,
    PeriodicCFE,
    PQState,
    block_from_json,
    block_prefix,
    block_to_json,
    cfe_expand,
    cfe_periodic,
    cfe_step_matrix,
    format_block,
    gauss_tau,
    in_omega,
    minimal_period_normalize,
    mobius_apply,
    normalize,
    parse_block,
    sigma_shift,
    surd_from_cfe,
    to_pq_form,
)
from cuntzfrac.surds import DomainError
from cuntzfrac.words import is_primitive


class TestPQForm:
    def test_no_scaling_needed(self):
        assert to_pq_form(normalize(-1, 1, 2, 5)) == PQState(-1, 2, 5)

    def test_scaling(self):
        assert to_pq_form(normalize(-1, 1, 3, 2)) == PQState(-3, 9, 18)

    def test_unit_denominator(self):
        assert to_pq_form(normalize(0, 1, 1, 2)) == PQState(0, 1, 2)

    def test_negative_b(self):
        st = to_pq_form(normalize(3, -1, 2, 5))
        assert (st.D - st.P * st.P) % st.Q == 0

    def test_invariant_on_randoms(self):
        rng = random.Random(5)
        for _ in range(300):
            st = to_pq_form(random_surd(rng))
            assert (st.D - st.P * st.P) % st.Q == 0

    def test_state_validation(self):
        with pytest.raises(ValueError):
            PQState(0, 0, 5)
        with pytest.raises(ValueError):
            PQState(0, 1, 4)
        with pytest.raises(ValueError):
            PQState(1, 3, 5)


class TestExpand:
    def test_golden(self):
        assert cfe_expand(normalize(-1, 1, 2, 5), 5) == (1, 1, 1, 1, 1)

    def test_sqrt2(self):
        assert cfe_expand(normalize(-1, 1, 1, 2), 4) == (2, 2, 2, 2)

    def test_sqrt3(self):
        assert cfe_expand(normalize(-1, 1, 1, 3), 4) == (1, 2, 1, 2)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cfe_expand(normalize(1, 1, 2, 5), 4)

    def test_prefix_consistency(self):
        rng = random.Random(11)
        for _ in range(100):
            x = random_surd(rng)
            long = cfe_expand(x, 30)
            assert cfe_expand(x, 12) == long[:12]
            assert all(a >= 1 for a in long)


class TestPeriodic:
    def test_golden(self):
        assert cfe_periodic(normalize(-1, 1, 2, 5)) == PeriodicCFE((), (1,))

    def test_sqrt13(self):
        assert cfe_periodic(normalize(-3, 1, 2, 13)) == PeriodicCFE((), (3,))

    def test_sqrt3(self):
        assert cfe_periodic(normalize(-1, 1, 1, 3)) == PeriodicCFE((), (1, 2))

    def test_matches_expansion(self):
        rng = random.Random(17)
        for _ in range(150):
            x = random_surd(rng)
            e = cfe_periodic(x)
            assert block_prefix(e, 40) == cfe_expand(x, 40)


class TestNormalizeBlock:
    def test_primitive_root(self):
        assert minimal_period_normalize((), (1, 2, 1, 2)) == PeriodicCFE((), (1, 2))

    def test_full_absorption(self):
        assert minimal_period_normalize((1, 1), (1,)) == PeriodicCFE((), (1,))

    def test_single_step_absorption(self):
        assert minimal_period_normalize((2, 1), (1,)) == PeriodicCFE((2,), (1,))

    def test_rotation_absorption(self):
        assert minimal_period_normalize((1, 2), (1, 2)) == PeriodicCFE((), (1, 2))

    def test_sequence_never_changes(self):
        rng = random.Random(23)
        for _ in range(300):
            initial = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 4)))
            period = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 4)))
            reps = rng.randint(1, 3)
            e = minimal_period_normalize(initial, period * reps)
            n = len(initial) + 3 * len(period) + 5
            raw = (initial + period * 20)[:n]
            assert block_prefix(e, n) == raw

    def test_constructor_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            PeriodicCFE((), (1, 2, 1, 2))
        with pytest.raises(ValueError):
            PeriodicCFE((1,), (1,))
        with pytest.raises(ValueError):
            PeriodicCFE((), ())
        with pytest.raises(ValueError):
            PeriodicCFE((), (0,))


class TestSurdFromCFE:
    def test_golden(self):
        assert surd_from_cfe(PeriodicCFE((), (1,))) == normalize(-1, 1, 2, 5)

    def test_single_letter_family(self):
        for k in range(1, 8):
            assert surd_from_cfe(PeriodicCFE((), (k,))) == normalize(-k, 1, 2, k * k + 4)
        assert surd_from_cfe(PeriodicCFE((), (2,))) == normalize(-2, 1, 2, 8)

    def test_three_letter_block(self):
        assert surd_from_cfe(PeriodicCFE((), (1, 2, 3))) == normalize(-4, 1, 3, 37)

    def test_round_trip_small_blocks(self):
        initials = [()] + [(i,) for i in range(1, 6)] + [(2, 1), (3, 2), (1, 3)]
        for k in range(1, 4):
            for period in itertools.product(range(1, 6), repeat=k):
                if not is_primitive(period):
                    continue
                for initial in initials:
                    if initial and initial[-1] == period[-1]:
                        continue
                    e = PeriodicCFE(initial, period)
                    assert cfe_periodic(surd_from_cfe(e)) == e

    def test_round_trip_from_pq_window(self):
        # every state (P + sqrt(D))/Q in (0, 1) with P, Q in the window around
        # sqrt(D), for every non-square D up to 2000
        count = 0
        for d in range(2, 2001):
            r = math.isqrt(d)
            if r * r == d:
                continue
            for p in range(-r - 1, r + 1):
                num = d - p * p
                for q in range(-2 * r - 1, 2 * r + 2):
                    if q == 0 or num % q:
                        continue
                    x = normalize(p, 1, q, d)
                    if not in_omega(x):
                        continue
                    assert surd_from_cfe(cfe_periodic(x)) == x
                    count += 1
        assert count > 100_000


class TestSigmaShift:
    def test_drops_initial(self):
        assert sigma_shift(PeriodicCFE((5,), (1,))) == PeriodicCFE((), (1,))

    def test_rotates_period(self):
        assert sigma_shift(PeriodicCFE((), (1, 2))) == PeriodicCFE((), (2, 1))

    def test_fixed_point(self):
        assert sigma_shift(PeriodicCFE((), (1,))) == PeriodicCFE((), (1,))

    def test_conjugates_gauss_map(self):
        rng = random.Random(31)
        for _ in range(100):
            x = random_surd(rng)
            assert cfe_periodic(gauss_tau(x)) == sigma_shift(cfe_periodic(x))

    def test_prepend_conjugacy(self):
        rng = random.Random(37)
        for _ in range(100):
            x = random_surd(rng)
            i = rng.randint(1, 7)
            img = mobius_apply(cfe_step_matrix(i), x)
            assert cfe_expand(img, 21) == (i,) + cfe_expand(x, 20)


class TestBlockText:
    def test_format(self):
        assert format_block(PeriodicCFE((), (1, 2, 3))) == "(1,2,3)"
        assert format_block(PeriodicCFE((2, 1), (3, 1, 4))) == "2,1,(3,1,4)"

    def test_parse(self):
        assert parse_block("(1,2,3)") == PeriodicCFE((), (1, 2, 3))
        assert parse_block("2,1,(3,1,4)") == PeriodicCFE((2, 1), (3, 1, 4))

    def test_parse_canonicalizes(self):
        assert parse_block("(2,2)") == PeriodicCFE((), (2,))
        assert parse_block("1,(1)") == PeriodicCFE((), (1,))

    @pytest.mark.parametrize("bad", ["", "1,2,3", "()", "(1,2", "(1,0)", "(a)"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_block(bad)

    def test_json_round_trip(self):
        e = PeriodicCFE((2,), (3, 1))
        obj = block_to_json(e)
        assert obj == {"initial": [2], "period": [3, 1]}
        assert block_from_json(obj) == e
