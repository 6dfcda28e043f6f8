import json

import pytest
from hypothesis import given, strategies as st

from qsing.divisor import (
    Chain,
    DivisorCounts,
    ExceptionalDivisor,
    Star,
    bundled_divisors,
    counts,
    cyclic_divisor,
    dihedral_embedding_dimension,
    find_divisor,
    load_divisor,
    load_divisor_file,
    split_h1,
)
from qsing.errors import ArmCountError, MinimalityViolation, ParseError, ShapeMismatch
from qsing.hj import embedding_dimension, hj_expand
from strategies import coprime_pairs, star_records

D4 = {"central": -2, "arms": [[-2], [-2], [-2]]}


def test_cyclic_divisor_examples():
    assert cyclic_divisor(7, 3).shape == Chain((-3, -2, -2))
    assert cyclic_divisor(2, 1).shape == Chain((-2,))
    assert cyclic_divisor(5, 1).shape == Chain((-5,))


@pytest.mark.parametrize("p", range(2, 30))
def test_counts_single_curve(p):
    assert counts(load_divisor({"chain": [-p]})) == DivisorCounts(2 * (p - 1), 1, 2 * p - 1, p - 1)


def test_counts_examples():
    assert counts(load_divisor({"chain": [-3, -2, -2]})) == DivisorCounts(8, 3, 11, 4)
    d4 = load_divisor(D4)
    assert counts(d4) == DivisorCounts(8, 4, 12, 4)
    # central curve contributes b - 1 = 1, each arm 1
    assert split_h1(d4) == 1 + 3


def test_load_divisor_round_trip():
    div = load_divisor(json.dumps(D4))
    assert div.shape == Star(-2, ((-2,), (-2,), (-2,)))
    assert div.to_record() == D4
    chain = load_divisor('{"chain": [-3, -2]}')
    assert chain.shape == Chain((-3, -2))
    assert load_divisor(chain.to_record()) == chain
    labelled = load_divisor({"label": "x", "chain": [-4]})
    assert labelled.to_record() == {"label": "x", "chain": [-4]}


@pytest.mark.parametrize(
    "record, error",
    [
        ({"central": -1, "arms": [[-2], [-2], [-2]]}, MinimalityViolation),
        ({"chain": [-3, -1]}, MinimalityViolation),
        ({"chain": [-3, 0]}, MinimalityViolation),
        ({"central": -2, "arms": [[-2], [-2]]}, ArmCountError),
        ({"central": -2, "arms": [[-2], [-2], [-2], [-2]]}, ArmCountError),
        ({"central": -2}, ParseError),
        ({"chain": "abc"}, ParseError),
        ({"chain": [-2.0]}, ParseError),
        ({"chain": []}, ParseError),
        ({"chain": [-2], "central": -2, "arms": []}, ParseError),
        ("not json", ParseError),
        ("[1, 2]", ParseError),
    ],
)
def test_load_divisor_errors(record, error):
    with pytest.raises(error):
        load_divisor(record)


def test_dihedral_embedding_dimension_examples():
    assert dihedral_embedding_dimension(load_divisor(D4)) == 3
    assert dihedral_embedding_dimension(
        load_divisor({"central": -3, "arms": [[-2], [-2], [-2, -2]]})
    ) == 4
    with pytest.raises(ShapeMismatch):
        dihedral_embedding_dimension(load_divisor({"chain": [-3]}))


@given(coprime_pairs(max_p=1000))
def test_cyclic_h1_matches_embedding_dimension(pq):
    p, q = pq
    c = counts(cyclic_divisor(p, q))
    assert c.h1Theta == embedding_dimension(p, q) + hj_expand(p, q).k - 3


@given(star_records())
def test_star_split_count_equals_flat_sum(rec):
    div = load_divisor(rec)
    assert split_h1(div) == counts(div).h1Theta


@given(star_records())
def test_dihedral_identity(rec):
    div = load_divisor(rec)
    c = counts(div)
    e = dihedral_embedding_dimension(div)
    assert 2 * e + 3 * c.kGamma - 7 == c.jGamma + c.kGamma - 1


@given(star_records(), st.integers(0, 2), st.integers(2, 9))
def test_counts_monotone(rec, arm, e):
    before = counts(load_divisor(rec))
    rec["arms"][arm] = rec["arms"][arm] + [-e]
    after = counts(load_divisor(rec))
    assert after.jGamma - before.jGamma == 2 * (e - 1)
    assert after.kGamma - before.kGamma == 1
    assert after.dGamma - before.dGamma == 2 * e - 1


def test_bundled_dataset():
    records = bundled_divisors()
    d4 = find_divisor("D4", records)
    assert d4 is not None and counts(d4).kGamma == 4
    assert find_divisor("dihedral:1,2", records) == d4
    assert counts(find_divisor("icosa:1", records)).kGamma == 8
    assert counts(find_divisor("octa:1", records)).kGamma == 7
    assert counts(find_divisor("tetra:1", records)).kGamma == 6
    for n in range(2, 11):
        assert counts(find_divisor(f"dihedral:1,{n}", records)).kGamma == n + 2
    assert find_divisor("nonexistent", records) is None


def test_divisor_file_forms(tmp_path):
    single = tmp_path / "one.json"
    single.write_text(json.dumps(D4))
    assert len(load_divisor_file(single)) == 1
    many = tmp_path / "many.json"
    many.write_text(json.dumps([D4, {"chain": [-3]}]))
    assert len(load_divisor_file(many)) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ParseError):
        load_divisor_file(bad)
    with pytest.raises(ParseError):
        load_divisor_file(tmp_path / "missing.json")


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "divisors.json").write_text(json.dumps([{"label": "only", "chain": [-5]}]))
    monkeypatch.setenv("QSING_DATA_DIR", str(tmp_path))
    records = bundled_divisors()
    assert [d.label for d in records] == ["only"]


def test_divisor_is_hashable_value():
    a = load_divisor(D4)
    b = load_divisor(dict(D4))
    assert a == b and hash(a) == hash(b)
    assert isinstance(a, ExceptionalDivisor)
