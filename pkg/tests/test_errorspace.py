"""Tests for error enumeration, filtering, and coset grouping."""

from __future__ import annotations

import pytest

from twep.errorspace import (
    CapExceededError,
    ErrorSet,
    coset_classes,
    count_errors,
    enumerate_errors,
    filter_by_outcome,
)
from twep.pauli import PauliVec, canonical_key, parse, symplectic_product, weight
from twep.stabilizer import StabilizerSet


class TestCounting:
    @pytest.mark.parametrize(
        "n, t, d, expected",
        [
            (7, 1, 2, 22),
            (9, 2, 2, 352),
            (4, 1, 3, 33),
            (6, 1, 2, 19),
            (15, 1, 2, 46),
            (31, 1, 2, 94),
            (11, 0, 2, 1),
        ],
    )
    def test_closed_form(self, n, t, d, expected):
        assert count_errors(n, t, d) == expected

    def test_enumeration_matches_count(self):
        for n in range(1, 11):
            for t in range(0, min(n, 3) + 1):
                for d in (2, 3):
                    got = enumerate_errors(n, t, d)
                    assert len(got.members) == count_errors(n, t, d), (n, t, d)

    def test_cap_enforced(self):
        with pytest.raises(CapExceededError) as err:
            enumerate_errors(9, 2, 2, cap=100)
        assert err.value.count == 352


class TestEnumerationOrder:
    def test_identity_first(self):
        errors = enumerate_errors(5, 2, 2)
        assert errors.members[0].is_identity

    def test_weight_major_key_minor(self):
        errors = enumerate_errors(5, 2, 2)
        keys = [(weight(e), canonical_key(e)) for e in errors.members]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_weight_bound_respected(self):
        errors = enumerate_errors(6, 2, 2)
        assert all(weight(e) <= 2 for e in errors.members)


class TestFilter:
    def test_brute_force_agreement_on_four_register_parity(self):
        errors = enumerate_errors(4, 1, 2)
        m = parse("XXXX", 2)
        kept = filter_by_outcome(errors, m, 0)
        # Oracle: direct commutation scan.
        expected = [e for e in errors.members if symplectic_product(m, e) == 0]
        assert list(kept.members) == expected
        assert [str(e) for e in kept.members] == [
            "IIII",
            "XIII",
            "IXII",
            "IIXI",
            "IIIX",
        ]

    def test_identity_measurement_keeps_all(self):
        errors = enumerate_errors(3, 1, 2)
        kept = filter_by_outcome(errors, PauliVec.identity(2, 3), 0)
        assert kept.members == errors.members

    def test_identity_measurement_nonzero_outcome_empties(self):
        errors = enumerate_errors(3, 1, 2)
        kept = filter_by_outcome(errors, PauliVec.identity(2, 3), 1)
        assert kept.members == ()

    def test_outcome_classes_partition(self):
        for d, m_text in ((2, "XYZI"), (3, "X,Z2,XZ,I")):
            errors = enumerate_errors(4, 1, d)
            m = parse(m_text, d)
            parts = [filter_by_outcome(errors, m, o).members for o in range(d)]
            assert sum(len(p) for p in parts) == len(errors.members)
            assert set().union(*[set(p) for p in parts]) == set(errors.members)

    def test_commuting_plus_anticommuting_total(self):
        errors = enumerate_errors(5, 2, 2)
        m = parse("XZXZX", 2)
        c = len(filter_by_outcome(errors, m, 0).members)
        a = len(filter_by_outcome(errors, m, 1).members)
        assert c + a == len(errors.members)


class TestCosetClasses:
    def test_degenerate_pair_merges(self):
        s = StabilizerSet(
            2, 4, [parse(g, 2) for g in ("XXXX", "ZZZZ", "XXII", "ZZII")]
        )
        members = (parse("YIII", 2), parse("IYII", 2))
        errors = ErrorSet(2, 4, members, provenance="filtered")
        partition = coset_classes(errors, s)
        assert partition.is_single_class
        assert partition.representatives[0] == parse("YIII", 2)

    def test_empty_stabilizer_keeps_singletons(self):
        errors = enumerate_errors(4, 1, 2)
        partition = coset_classes(errors, StabilizerSet(2, 4))
        assert len(partition.classes) == len(errors.members)

    def test_distinct_cosets_stay_apart(self):
        s = StabilizerSet(
            2, 4, [parse(g, 2) for g in ("XXXX", "ZZZZ", "XXII", "ZZII")]
        )
        members = (parse("XIII", 2), parse("ZIII", 2))
        errors = ErrorSet(2, 4, members, provenance="filtered")
        assert len(coset_classes(errors, s).classes) == 2

    def test_enlarging_stabilizer_coarsens(self):
        errors = enumerate_errors(4, 1, 2)
        small = StabilizerSet(2, 4, [parse("XXXX", 2)])
        large = small.extend(parse("ZZZZ", 2)).extend(parse("XXII", 2))
        p_small = coset_classes(errors, small)
        p_large = coset_classes(errors, large)
        assert len(p_large.classes) <= len(p_small.classes)
        # Every small class sits inside one large class.
        locate = {}
        for idx, cls in enumerate(p_large.classes):
            for e in cls:
                locate[e] = idx
        for cls in p_small.classes:
            assert len({locate[e] for e in cls}) == 1

    def test_representative_minimizes_weight_then_key(self, four_qubit_code):
        s = four_qubit_code.extend(parse("XXII", 2)).extend(parse("ZZII", 2))
        errors = ErrorSet(
            2, 4, (parse("YYII", 2), parse("IIII", 2)), provenance="filtered"
        )
        partition = coset_classes(errors, s)
        assert partition.is_single_class
        assert partition.representatives[0].is_identity
