from fractions import Fraction

import pytest

from greedyseq.analysis import (
    check_monotonicity,
    compare_a_with_lambda,
    compute_k0,
    even_family_search,
    find_counterexample,
    verify_proposition3,
    verify_subsequence_corollaries,
    verify_theorem2,
    verify_theorem3,
)
from greedyseq.coin_core import Verdict
from greedyseq.errors import HorizonTooSmall, IneligibleParams, NotMonotonic
from greedyseq.recurrences import (
    MINUS,
    NonHomogParams,
    Type1Params,
    Type2Params,
    char_roots,
    generate_nonhomog,
    generate_type1,
    generate_type2,
)


def k0_by_fractions(seq, low, high, horizon):
    ratios = {n: Fraction(seq[n], seq[n - 1]) for n in range(1, horizon + 1)}
    for start in range(1, horizon + 1):
        if all(low < ratios[n] < high for n in range(start, horizon + 1)):
            return start
    return None


def type1_grid():
    return [
        Type1Params(a, p, q)
        for p in range(1, 9)
        for q in range(1, p + 1)
        for a in range(2, p + q + 1)
    ]


def type2_grid():
    return [
        Type2Params(a, p, q)
        for p in range(3, 11)
        for q in range(1, p - 1)
        for a in range(2, 13)
    ]


def test_k0_examples():
    assert compute_k0(generate_type1(Type1Params(2, 1, 1), 21), "type1", 1, 20).k0 == 2
    ra = compute_k0(generate_type2(Type2Params(2, 6, 4), 21), "type2", 6, 20)
    assert ra.k0 == 4 and ra.worst_case_bracket is True
    assert ra.pre_onset_ratios == [(1, (2, 1)), (2, (4, 1)), (3, (5, 1))]
    assert compute_k0(generate_type2(Type2Params(3, 4, 2), 21), "type2", 4, 20).k0 == 2


def test_k0_horizon_errors():
    seq = generate_type1(Type1Params(2, 1, 1), 10)
    with pytest.raises(HorizonTooSmall):
        compute_k0(seq, "type1", 1, 4)
    with pytest.raises(HorizonTooSmall):
        compute_k0(seq, "type1", 1, 10)


def test_k0_matches_fraction_oracle_and_bounds():
    for pr in type1_grid():
        seq = generate_type1(pr, 21)
        ra = compute_k0(seq, "type1", pr.p, 20)
        assert ra.k0 == k0_by_fractions(seq, pr.p, pr.p + 1, 20)
        assert 2 <= ra.k0 <= 3
        if pr.a > pr.q:
            assert ra.k0 == 2
    for pr in type2_grid():
        seq = generate_type2(pr, 21)
        ra = compute_k0(seq, "type2", pr.p, 20)
        assert ra.k0 == k0_by_fractions(seq, pr.p - 1, pr.p, 20)
        assert 2 <= ra.k0 <= 4
        if pr.a > pr.q:
            assert ra.k0 == 2
        elif 2 * pr.a > pr.q:
            assert ra.k0 <= 3
        if ra.k0 == 4:
            assert ra.worst_case_bracket


def test_ceiling_after_onset():
    for pr in type1_grid():
        seq = generate_type1(pr, 21)
        ra = compute_k0(seq, "type1", pr.p, 20)
        assert ra.ceil_ratio_after_onset == pr.p + 1
        for k in range(ra.k0, 21):
            assert -(-seq[k] // seq[k - 1]) == pr.p + 1
    for pr in type2_grid():
        seq = generate_type2(pr, 21)
        ra = compute_k0(seq, "type2", pr.p, 20)
        assert ra.ceil_ratio_after_onset == pr.p


def test_jacobsthal_never_settles():
    seq = generate_type1(Type1Params(3, 1, 2), 30)
    # lambda = 2 exactly; ratios straddle it so a late window can still catch one inside
    ra = compute_k0(seq, "type1", 1, 28)
    assert ra.k0 is None or ra.k0 >= 20


def test_compare_a_with_lambda_matches_float():
    for pr in type1_grid():
        lam = char_roots(pr.p, pr.q, "type1").lam
        expected = (pr.a > lam) - (pr.a < lam)
        assert compare_a_with_lambda(pr.a, pr.p, pr.discriminant) == expected
    assert compare_a_with_lambda(2, 1, 9) == 0  # x^2 - x - 2 has root 2


def test_monotonicity_examples():
    fib = Type1Params(2, 1, 1)
    assert check_monotonicity(generate_type1(fib, 10), fib)
    t2 = Type2Params(2, 6, 4)
    assert check_monotonicity(generate_type2(t2, 10), t2)
    # lambda = a = 2: ratios are constant
    jac = Type1Params(2, 1, 2)
    assert generate_type1(jac, 8) == [1, 2, 4, 8, 16, 32, 64, 128]
    assert check_monotonicity(generate_type1(jac, 8), jac)


def test_monotonicity_over_grids():
    for pr in type1_grid():
        assert check_monotonicity(generate_type1(pr, 16), pr), pr
    for pr in type2_grid():
        assert check_monotonicity(generate_type2(pr, 16), pr), pr


def test_monotonicity_detects_wrong_direction():
    fib = Type1Params(2, 1, 1)
    seq = generate_type1(fib, 10)
    seq[6] += 1
    assert not check_monotonicity(seq, fib)
    with pytest.raises(ValueError):
        check_monotonicity(seq[:7], fib)


@pytest.mark.parametrize("params", [Type1Params(2, 1, 1), Type1Params(2, 2, 1), Type1Params(4, 2, 2)])
def test_theorem2_examples(params):
    v = verify_theorem2(params, 30 if params.a == 2 else 20)
    assert v.holds and v.first_failure is None


def test_theorem2_refuses_ineligible():
    with pytest.raises(IneligibleParams):
        verify_theorem2(Type1Params(5, 2, 2), 10)
    with pytest.raises(IneligibleParams):
        verify_theorem2(Type1Params(3, 1, 2), 10)


def test_theorem2_grid():
    assert all(verify_theorem2(pr, 20).holds for pr in type1_grid())


@pytest.mark.parametrize("params", [Type2Params(2, 3, 1), Type2Params(2, 6, 4), Type2Params(5, 4, 2)])
def test_theorem3_examples(params):
    assert verify_theorem3(params, 25).holds


def test_theorem3_grid():
    assert all(verify_theorem3(pr, 20).holds for pr in type2_grid())


def test_proposition3():
    v = verify_proposition3(NonHomogParams(2, 2, 1, 1), 15)
    assert v.holds and v.notes["k0"] >= 2
    v = verify_proposition3(NonHomogParams(2, 3, 2, 2), 15)
    assert v.holds
    with pytest.raises(IneligibleParams):
        verify_proposition3(NonHomogParams(3, 3, 1, 2, MINUS), 15)
    with pytest.raises(IneligibleParams):
        verify_proposition3(NonHomogParams(2, 1, 2, 1), 15)


def test_proposition3_readings_over_grid():
    strict_ok = relaxed_ok = 0
    for p in range(1, 7):
        for q in range(1, p + 1):
            for a in range(2, 12):
                for r in (-3, -1, 1, 2, 5):
                    params = NonHomogParams(a, p, q, r)
                    try:
                        v = verify_proposition3(params, 15)
                    except (IneligibleParams, NotMonotonic):
                        continue
                    assert v.holds, params
                    relaxed_ok += 1
                    if v.notes["strict_reading_applies"]:
                        assert verify_proposition3(params, 15, strict=True).holds
                        strict_ok += 1
    assert relaxed_ok > strict_ok > 0


def test_find_counterexample_jacobsthal_golden():
    rep = find_counterexample([1, 3, 5, 11, 21, 43])
    assert rep.to_dict() == {
        "verdict": "NotTotallyGreedy",
        "witness_amount": 63,
        "greedy_cost_at_witness": 5,
        "optimal_cost_at_witness": 3,
        "failing_prefix_length": 6,
        "witness_verified": True,
    }


def test_find_counterexample_nonhomog_and_fibonacci():
    rep = find_counterexample(generate_nonhomog(NonHomogParams(3, 3, 1, 2, MINUS), 5))
    assert rep.failing_prefix_length == 5 and rep.witness_amount == 87
    for n in (1, 2, 5, 20, 40):
        assert find_counterexample(generate_type1(Type1Params(2, 1, 1), n)).verdict is Verdict.TOTALLY_GREEDY


def test_find_counterexample_beyond_dp_limit():
    seq = [1, 3, 5, 11, 21, 43]
    rep = find_counterexample(seq, limit=10)
    assert rep.failing_prefix_length == 6
    assert rep.witness_amount is None and rep.witness_verified is False


def test_subsequence_corollaries():
    v = verify_subsequence_corollaries(Type1Params(2, 1, 1), 12)
    assert v["odd_subsequence"].holds
    assert v["odd_subsequence"].notes["transformed"] == {"family": "type2", "a": 3, "p": 3, "q": 1}
    v = verify_subsequence_corollaries(Type2Params(2, 3, 1), 10)
    assert v["odd_subsequence"].holds and v["even_subsequence_type2"].holds
    assert v["even_subsequence_type2"].notes["base_equality"] is True
    v = verify_subsequence_corollaries(Type2Params(3, 5, 1), 10)
    assert "even_subsequence_type2" not in v
    with pytest.raises(IneligibleParams):
        verify_subsequence_corollaries(Type1Params(9, 2, 1), 10)


def test_even_type1_notes():
    v = verify_subsequence_corollaries(Type1Params(2, 3, 2), 10)["even_subsequence_type1"]
    assert v.notes["in_stated_family"] and not v.notes["in_derived_family"]
    assert v.notes["base_equality"] is False
    v = verify_subsequence_corollaries(Type1Params(5, 3, 2), 10)["even_subsequence_type1"]
    assert v.notes["in_derived_family"] and v.notes["base_equality"] and v.holds


def test_even_family_report():
    rep = even_family_search(30)
    assert rep == even_family_search(30)
    assert rep.predicate_agrees_everywhere
    assert rep.all_solutions_in_derived_family and rep.derived_family_points_all_solutions
    assert len(rep.solutions) == sum(1 for p in range(1, 31) for q in range(1, p + 1) if p + q <= 30)
    assert not rep.stated_family_confirmed
    first = rep.stated_family_points[0]
    assert (first["p"], first["q"], first["a"], first["eligible"]) == (2, 1, 1, False)
    assert all(not pt["base_equality"] for pt in rep.stated_family_points)
