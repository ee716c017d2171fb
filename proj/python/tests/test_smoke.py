from fractions import Fraction

import pytest

import skein


def test_counts():
    assert len(skein.enumerate_ncm(6)) == 51
    assert len(skein.enumerate_ncp(7, singleton_free=True)) == 36
    assert skein.riordan_numbers(6) == [1, 0, 1, 1, 3, 6, 15]


def test_skein_action():
    v = skein.skein_act_ncm(2, skein.MatchingVector(skein.Matching("{{1,2},{3,4}}")))
    assert str(v) == "{{1,2},{3,4}} + {{1,4},{2,3}}"
    w = skein.skein_act_ncp(1, skein.PartitionVector(skein.SetPartition("{{1,2,3}}")))
    assert w.terms() == [(skein.SetPartition("[[1,2,3]]"), Fraction(-1))]


def test_vector_arithmetic():
    a = skein.Matching("[[1,2]]", 3)
    b = skein.Matching("[[2,3]]", 3)
    v = skein.MatchingVector({a: "1/2", b: 2})
    assert (v - v).is_zero()
    assert (3 * v).coeff(a) == Fraction(3, 2)


def test_projection_and_embedding():
    p = skein.project_matching(skein.MatchingVector(skein.Matching("[[1,3],[2,4]]")))
    assert str(p) == "-{{1,2},{3,4}} - {{1,4},{2,3}}"
    f = skein.embed_f(skein.SetPartition("{{1,2,3},{4,5}}"))
    assert len(f) == 3


def test_diagram_ring():
    ring = skein.DiagramRing(4)
    assert ring.normal_form("{1,2}{1,3}").is_zero()
    assert str(ring.normal_form("{1,3}{2,4}")) == "-{1,2}{3,4} - {1,4}{2,3}"
    assert ring.multiply(ring.h_full(), ring.h_full()).is_zero()
    assert ring.ideal_dimension() == 3


def test_characters():
    assert skein.mn_character([2, 1], [3]) == -1
    assert skein.hook_dim([3, 2]) == 5


def test_verify():
    reports = skein.verify("thm3.9-rank", 6, 1)
    assert reports[0]["status"] == "pass"
    assert reports[0]["actual"]["rank"] == [1, 1, 3, 6, 15]
    assert "counting" in skein.verify_suites()


def test_errors():
    with pytest.raises(skein.ParseError):
        skein.Matching("[[1,2]")
    with pytest.raises(skein.DomainError):
        skein.skein_act_ncm(5, skein.MatchingVector(skein.Matching("[[1,2],[3,4]]")))
    with pytest.raises(skein.SizeLimitError):
        skein.enumerate_set_partitions(12)
    with pytest.raises(skein.SkeinError):
        skein.verify("nonsense")
