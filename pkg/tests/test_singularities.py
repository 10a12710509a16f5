"""Dynkin classification, node dataset, and curve-count totals."""

import pytest

from k3pencils.groups import pgroup
from k3pencils.singularities import (
    ADEType,
    BinaryGroupClass,
    NodeOrbitRecord,
    binary_quotient_type,
    node_records,
    node_singularities,
    nu_totals,
    off_quadric_singularities,
    offquadric_reports,
    quadric_point_singularity,
    quadric_reports,
)

DEGREES = {"TxV": 6, "TT1": 6, "VxV": 6, "OxT": 8, "OO2": 8, "TxT": 8}


class TestADEType:
    def test_ranks(self):
        assert ADEType("A", 5).rank == 5
        assert ADEType("D", 4).rank == 4
        assert ADEType("E", 8).rank == 8

    def test_str_and_parse_roundtrip(self):
        for t in [ADEType("A", 1), ADEType("A", 15), ADEType("D", 6),
                  ADEType("E", 7)]:
            assert ADEType.parse(str(t)) == t
        assert ADEType.parse("D_4") == ADEType("D", 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            ADEType("A", 0)
        with pytest.raises(ValueError):
            ADEType("D", 3)
        with pytest.raises(ValueError):
            ADEType("E", 5)
        with pytest.raises(ValueError):
            ADEType("B", 2)
        with pytest.raises(ValueError):
            ADEType.parse("Q7")

    def test_immutability_and_ordering(self):
        t = ADEType("A", 3)
        with pytest.raises(AttributeError):
            t.index = 4
        assert sorted([ADEType("E", 6), ADEType("A", 7), ADEType("D", 5)]) \
            == [ADEType("A", 7), ADEType("D", 5), ADEType("E", 6)]


class TestBinaryGroupClass:
    def test_parse_and_orders(self):
        cases = {
            "id": 1, "Z2": 2, "Z3": 3, "Z4": 4,
            "Z2xZ2": 4, "D3": 6, "T": 12, "O": 24, "I": 60,
        }
        for label, order in cases.items():
            cls = BinaryGroupClass.parse(label)
            assert cls.so3_order == order
            assert cls.label == label

    def test_d2_is_klein_four(self):
        assert BinaryGroupClass("D", 2) == BinaryGroupClass.parse("Z2xZ2")
        assert BinaryGroupClass("D", 2).label == "Z2xZ2"

    def test_validation(self):
        with pytest.raises(ValueError):
            BinaryGroupClass("Z", 1)
        with pytest.raises(ValueError):
            BinaryGroupClass("D", 1)
        with pytest.raises(ValueError):
            BinaryGroupClass("T", 3)
        with pytest.raises(ValueError):
            BinaryGroupClass.parse("Q8")
        with pytest.raises(ValueError):
            BinaryGroupClass.parse("Zx")


class TestBinaryQuotientType:
    def test_classical_map(self):
        cases = [
            ("id", ADEType("A", 1)),
            ("Z2", ADEType("A", 3)),
            ("Z3", ADEType("A", 5)),
            ("Z4", ADEType("A", 7)),
            ("Z2xZ2", ADEType("D", 4)),
            ("D3", ADEType("D", 5)),
            ("T", ADEType("E", 6)),
            ("O", ADEType("E", 7)),
            ("I", ADEType("E", 8)),
        ]
        for label, expect in cases:
            assert binary_quotient_type(
                BinaryGroupClass.parse(label)) == expect

    def test_rank_vs_binary_order(self):
        # for cyclic F the resolution has |F~| - 1 curves
        for n in range(2, 7):
            f = BinaryGroupClass("Z", n)
            assert binary_quotient_type(f).rank == 2 * f.so3_order - 1


class TestPointClassifiers:
    def test_quadric_point_rules(self):
        assert quadric_point_singularity((3, 2)) == ADEType("A", 2)
        assert quadric_point_singularity((4, 3)) == ADEType("A", 3)
        assert quadric_point_singularity((2, 3)) == ADEType("A", 1)
        with pytest.raises(ValueError):
            quadric_point_singularity((1, 5))

    def test_off_quadric_reports(self):
        assert off_quadric_singularities((3, 6)) == [(6, ADEType("A", 2))]
        assert off_quadric_singularities((4, 2)) == [(2, ADEType("A", 3))]
        assert off_quadric_singularities((2, 0)) == []


EXPECTED_NODE_SING = {
    "TxV": ["D4", "A1", "A1", "D4"],
    "TT1": ["3E6", "3A5", "A1", "D4"],
    "VxV": ["3D4", "3A1", "3A1", "3D4"],
    "OxT": ["E6", "D4", "A3", "A5"],
    "OO2": ["2E7", "A7", "A3", "2D5"],
    "TxT": ["2E6", "A3", "A1", "2A5"],
}


class TestNodeDataset:
    @pytest.mark.parametrize("label", sorted(DEGREES))
    def test_counts_and_orbit_formula(self, label):
        ns = (12, 48, 48, 12) if DEGREES[label] == 6 else (24, 72, 144, 96)
        recs = node_records(label)
        ph = pgroup(label).order()
        assert [r.node_count for r in recs] == list(ns)
        for r in recs:
            assert r.orbit_count * ph == r.node_count * r.fix_group.so3_order

    @pytest.mark.parametrize("label", sorted(EXPECTED_NODE_SING))
    def test_node_singularity_cells(self, label):
        got = []
        for rec in node_records(label):
            count, t = node_singularities(rec)[0]
            got.append(str(t) if count == 1 else "%d%s" % (count, t))
        assert got == EXPECTED_NODE_SING[label]

    def test_record_validation(self):
        with pytest.raises(ValueError, match="divide"):
            NodeOrbitRecord("TxV", 1, 12, 5, "id")
        with pytest.raises(ValueError):
            NodeOrbitRecord("TxV", 1, 12, 1, "Q8")


def _cells(report):
    return ["%d%s" % (c, t) for c, t in report]


class TestSingularityReports:
    def test_quadric_cells(self):
        assert _cells(quadric_reports("TxV", 6)) == ["6A2"]
        assert quadric_reports("TT1", 6) == []
        assert quadric_reports("VxV", 6) == []
        assert sorted(_cells(quadric_reports("OxT", 8))) == [
            "1A1", "2A1", "2A3"]
        assert _cells(quadric_reports("OO2", 8)) == ["1A1", "1A1"]
        assert _cells(quadric_reports("TxT", 8)) == ["2A1", "2A1"]

    def test_offquadric_cells(self):
        assert _cells(offquadric_reports("TT1", 6)) == [
            "1A1", "1A1", "1A1", "6A2"]
        assert _cells(offquadric_reports("OO2", 8)) == [
            "4A1", "1A2", "1A2", "2A3"]
        assert _cells(offquadric_reports("VxV", 6)) == ["1A1"] * 9


SMOOTH_NU = {
    "TxV": (4, 12, 3, 0, 19),
    "TT1": (2, 0, 15, 0, 17),
    "VxV": (6, 0, 9, 0, 15),
    "OxT": (3, 9, 7, 0, 19),
    "OO2": (2, 2, 14, 0, 18),
    "TxT": (4, 4, 10, 0, 18),
}

# recomputed (nu3, nu4, nu) per fiber; the OO2 fiber-1 components come
# out (2, 14) against a printed (0, 16) with the same total 20 -- the
# printed pair contradicts that row's own 2E7 cell, see the verification
# dataset flags
SINGULAR_NU = {
    "TxV": [(0, 4, 20), (3, 1, 20), (3, 1, 20), (0, 4, 20)],
    "TT1": [(0, 18, 20), (3, 15, 20), (15, 1, 18), (12, 4, 18)],
    "VxV": [(0, 12, 18), (9, 3, 18), (9, 3, 18), (0, 12, 18)],
    "OxT": [(2, 6, 20), (4, 4, 20), (5, 3, 20), (3, 5, 20)],
    "OO2": [(2, 14, 20), (8, 7, 19), (12, 3, 19), (6, 10, 20)],
    "TxT": [(0, 12, 20), (8, 3, 19), (10, 1, 19), (2, 10, 20)],
}


class TestNuTotals:
    @pytest.mark.parametrize("label", sorted(SMOOTH_NU))
    def test_smooth(self, label):
        assert nu_totals(label, DEGREES[label], "smooth") == SMOOTH_NU[label]

    @pytest.mark.parametrize("label", sorted(SINGULAR_NU))
    def test_singular_fibers(self, label):
        deg = DEGREES[label]
        recs = node_records(label)
        n1, n2 = SMOOTH_NU[label][:2]
        for fiber in (1, 2, 3, 4):
            n3, n4, nu = SINGULAR_NU[label][fiber - 1]
            assert nu_totals(label, deg, fiber, recs) == (n1, n2, n3, n4, nu)

    def test_missing_node_data(self):
        with pytest.raises(ValueError, match="missing node data"):
            nu_totals("TxV", 6, 1, [])
        with pytest.raises(ValueError, match="missing node data"):
            nu_totals("TxV", 6, 2, node_records("TxT"))

    def test_wrong_degree_node_data(self):
        recs = node_records("TxT")
        with pytest.raises(ValueError, match="node count"):
            nu_totals("TxT", 6, 1, recs)

    def test_smooth_ignores_node_data(self):
        assert nu_totals("VxV", 6, "smooth", None) == SMOOTH_NU["VxV"]
