import pytest
from hypothesis import given, strategies as st

from liecohom import liedata
from liecohom.liedata import CorruptTable, UnknownGroup, degree_partition, group_data


def test_g2_record():
    g = group_data("G2")
    assert (g.rank, g.dim, g.degrees_q) == (2, 14, (2, 6))
    assert [(s.degree, s.torsion_index, s.cup_length) for s in g.special_classes] == [(6, 2, 2)]


def test_e8_record():
    g = group_data("E8")
    assert (g.rank, g.dim) == (8, 248)
    assert g.degrees_q == (2, 8, 12, 14, 18, 20, 24, 30)
    assert [s.degree for s in g.special_classes] == [6, 8, 10, 12, 18, 20, 30]
    assert [s.torsion_index for s in g.special_classes] == [2, 3, 2, 5, 2, 3, 2]
    assert [s.cup_length for s in g.special_classes] == [8, 3, 4, 5, 2, 3, 2]


def test_su4_record():
    g = group_data("SU(4)")
    assert (g.rank, g.dim, g.degrees_q, g.special_classes) == (3, 15, (2, 3, 4), ())


def test_d1_examples():
    assert liedata.d1(group_data("E7"), 2) == (6, 10, 18)
    assert liedata.d1(group_data("E8"), 3) == (8, 20)
    assert liedata.d1(group_data("G2"), 7) == ()


def test_partition_examples():
    assert degree_partition(group_data("E8"), 5) == liedata.DegreePartition((12,), (4, 16, 24, 28, 36, 40, 48))
    e7 = degree_partition(group_data("E7"), 2)
    assert (e7.d1, e7.d2) == ((6, 10, 18), (4, 16, 24, 28))


@pytest.mark.parametrize("name", ["E9", "G3", "SU(1)", "Sp(0)", "Spin(6)", "Spin(129)", "SO(5)", ""])
def test_unknown_groups(name):
    with pytest.raises(UnknownGroup):
        group_data(name)


def test_whitespace_tolerated():
    assert group_data(" SU( 3 ) ").name == "SU(3)"


def test_checksum_unchanged():
    assert liedata.table_checksum() == liedata.TABLE_CHECKSUM


def test_corrupt_rows_rejected():
    with pytest.raises(CorruptTable):
        liedata.SpecialClass(6, 7, 2)
    with pytest.raises(CorruptTable):
        liedata.SpecialClass(6, 2, 1)
    with pytest.raises(CorruptTable):
        liedata.LieGroupData("X", 2, 15, (2, 6))


def test_zeta_squares():
    e8 = group_data("E8")
    table = liedata.zeta_square_table(e8, 2)
    assert table[23] == "x6^6*x10"
    assert 29 not in table
    assert liedata.zeta_square_table(group_data("F4"), 3).get(7) is None
    assert liedata.zeta_square_table(group_data("G2"), 2) == {3: "x6"}
    assert set(liedata.zeta_square_table(group_data("E7"), 2)) == {3, 5, 9}
    with pytest.raises(UnknownGroup):
        liedata.zeta_square_table(group_data("SU(3)"), 2)


def test_spin_cup_lengths_are_powers_of_two():
    for n in range(7, 40):
        g = group_data(f"Spin({n})")
        assert liedata.SPIN_CUP_LENGTH_FLAG in g.flags
        for s in g.special_classes:
            assert s.cup_length & (s.cup_length - 1) == 0


def test_dump_is_json_ready():
    import json

    dump = liedata.all_tables()
    assert json.loads(json.dumps(dump)) == dump
    assert dump["groups"]["E8"]["partitions"]["3"] == {"d1": [8, 20], "d2": [4, 16, 28, 36, 40, 48]}


# -- properties ---------------------------------------------------------------

group_names = st.one_of(
    st.sampled_from(liedata.EXCEPTIONAL),
    st.integers(2, 64).map(lambda n: f"SU({n})"),
    st.integers(1, 64).map(lambda n: f"Sp({n})"),
    st.integers(7, 128).map(lambda n: f"Spin({n})"),
)
primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@given(group_names)
def test_dimension_identity(name):
    g = group_data(name)
    assert sum(2 * l - 1 for l in g.degrees_q) == g.dim
    assert len(g.degrees_q) == g.rank


@given(group_names, primes)
def test_partition_size(name, p):
    g = group_data(name)
    part = degree_partition(g, p)
    assert len(part.full) == g.rank
    assert not set(part.d1) & set(part.d2)
    if p > 5:
        assert part.d1 == ()
        assert part.d2 == tuple(sorted(2 * l for l in g.degrees_q))
