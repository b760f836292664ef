import pytest

import maxprim


def test_invariants_of_small_semigroup():
    inv = maxprim.invariants([3, 5])
    assert (inv.multiplicity, inv.max_primitive, inv.embedding_dimension) == (3, 5, 2)
    assert (inv.frobenius, inv.conductor, inv.genus, inv.left_count) == (7, 8, 4, 4)
    assert inv.wilf_holds


def test_minimal_generators_and_apery():
    assert maxprim.minimal_generators([5, 6, 10, 11, 12]) == [5, 6]
    assert maxprim.apery_set([3, 5]) == [0, 10, 5]
    assert maxprim.gcd([6, 10, 15]) == 1


def test_semigroup_object():
    s = maxprim.NumericalSemigroup([4, 6, 9, 13])
    assert s.generators == [4, 6, 9]
    assert 13 in s and 7 not in s
    assert s == maxprim.NumericalSemigroup([4, 6, 9])
    assert repr(s) == "<4,6,9>"


def test_errors_map_to_python_exceptions():
    with pytest.raises(maxprim.NotASemigroupError):
        maxprim.invariants([4, 6])
    with pytest.raises(ValueError):
        maxprim.minimal_generators([])
    with pytest.raises(maxprim.UsageError):
        maxprim.count_by_max_primitive(5, mode="bogus")


def test_enumerators_agree():
    for top in range(3, 12):
        for m in range(2, top):
            brute = maxprim.enumerate_brute_force(top, m)
            assert maxprim.enumerate_naive(top, m) == brute
            assert maxprim.enumerate_tree(top, m, len=1) == brute
            assert maxprim.enumerate_tree(top, m, jobs=2) == brute


def test_counts_match_known_values():
    assert [len(maxprim.enumerate_all(n)) for n in range(1, 8)] == [1, 0, 1, 1, 4, 2, 10]
    rows = maxprim.count_range(1, 20)
    assert rows[19]["A"] == 877 and rows[19]["N"] == 900
    full = maxprim.count_by_max_primitive(20, mode="full")
    assert full["A"] == 877 and sum(v["A"] for v in full["by_depth"].values()) == 877


def test_counting_helpers():
    assert [maxprim.moebius(n) for n in range(1, 7)] == [1, -1, -1, 0, -1, 1]
    assert maxprim.depth2_count(7) == 7
    a = {d: len(maxprim.enumerate_all(d)) for d in maxprim.divisors(12)}
    assert maxprim.frobenius_count_from_maxprim(12, a) == len(maxprim.frobenius_semigroups_oracle(12))
    assert maxprim.psi_map([3, 5]) == [3, 5, 7]


def test_wilf_checks():
    report = maxprim.verify_wilf(20, full_check=True)
    assert report["total_checked"] == 877 and report["violations"] == []
    cases = maxprim.classify_known_cases([50, 52, 53, 60])
    assert not any(cases.values())
    assert maxprim.wilf_holds([50, 52, 53, 60])
