"""Closure order on the orbit poset, checked against brute-force reachability."""

import random

import pytest

from microloc.poset import OrbitPoset, closure_leq, validate_poset


def brute_reachable(ids, covers, a, b):
    """Reflexive-transitive reachability by plain graph search."""
    if a == b:
        return True
    frontier = [a]
    seen = {a}
    while frontier:
        x = frontier.pop()
        for u, v in covers:
            if u == x and v not in seen:
                if v == b:
                    return True
                seen.add(v)
                frontier.append(v)
    return False


def random_dag(rng, n):
    ids = [f"o{i}" for i in range(n)]
    dims = {x: i for i, x in enumerate(ids)}
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                covers.append((ids[i], ids[j]))
    return ids, dims, covers


@pytest.mark.parametrize("seed", range(8))
def test_leq_matches_reachability_oracle(seed):
    rng = random.Random(seed)
    ids, dims, covers = random_dag(rng, rng.randint(3, 9))
    p = OrbitPoset(ids, dims, covers)
    for a in ids:
        for b in ids:
            assert p.leq(a, b) == brute_reachable(ids, covers, a, b), (a, b, covers)


@pytest.mark.parametrize("seed", range(8, 12))
def test_up_down_interval_against_oracle(seed):
    rng = random.Random(seed)
    ids, dims, covers = random_dag(rng, rng.randint(3, 9))
    p = OrbitPoset(ids, dims, covers)
    for a in ids:
        up = {b for b in ids if brute_reachable(ids, covers, a, b)}
        down = {b for b in ids if brute_reachable(ids, covers, b, a)}
        assert p.up_set(a) == up
        assert p.down_set(a) == down
        for b in ids:
            want = [x for x in ids
                    if brute_reachable(ids, covers, a, x)
                    and brute_reachable(ids, covers, x, b)]
            assert p.interval(a, b) == want


def test_bundled_poset_shape(dataset):
    p = dataset.poset
    assert p.bottom() == "S0"
    assert p.top() == "S11"
    assert validate_poset(p) == []
    # the two middle chains: S3 and S4 cover S2 and are incomparable
    assert p.leq("S2", "S3") and p.leq("S2", "S4")
    assert not p.leq("S3", "S4") and not p.leq("S4", "S3")
    assert not p.leq("S6", "S9")
    assert closure_leq(p, "S5", "S9")


def test_unknown_ids_raise(dataset):
    with pytest.raises(KeyError):
        dataset.poset.leq("S0", "S99")
    with pytest.raises(KeyError):
        dataset.poset.up_set("nope")


def test_validators_flag_bad_structure():
    p = OrbitPoset(["a", "b"], {"a": 2, "b": 1}, [("a", "b")])
    codes = {v.code for v in validate_poset(p)}
    assert "cover-dim" in codes

    q = OrbitPoset(["a", "b", "c"], {"a": 0, "b": 1, "c": 2},
                   [("a", "b"), ("b", "a")])
    codes = {v.code for v in validate_poset(q)}
    assert "cover-cycle" in codes

    r = OrbitPoset(["a", "b"], {"a": 0, "b": 1}, [], ambient_dim=5)
    codes = {v.code for v in validate_poset(r)}
    assert "no-unique-top" in codes and "no-unique-bottom" in codes


def test_top_not_dense_flagged():
    p = OrbitPoset(["a", "b"], {"a": 0, "b": 1}, [("a", "b")], ambient_dim=7)
    assert any(v.code == "top-not-dense" for v in validate_poset(p))
