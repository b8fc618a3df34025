"""Restriction data: validation, normality, centrality, grouplike elements."""

import pytest

import fusionrings as fr
from fusionrings.errors import InvalidRestriction


@pytest.fixture(scope="module")
def parity(su2, z2ring):
    return fr.su2_parity_restriction(su2, z2ring)


@pytest.fixture(scope="module")
def weights(su2, zring):
    return fr.su2_weight_restriction(su2, zring)


class TestValidation:
    def test_identity_restriction_valid(self, reps3):
        r = fr.identity_restriction(reps3)
        assert fr.validate_restriction(r).ok

    def test_trivial_restriction_valid(self, reps3, z2ring):
        unit_ring = fr.group_ring(fr.cyclic_group(1))
        r = fr.trivial_restriction(reps3, unit_ring)
        assert fr.validate_restriction(r).ok

    def test_parity_valid(self, parity):
        assert fr.validate_restriction(parity, depth=6).ok

    def test_weights_valid(self, weights):
        assert fr.validate_restriction(weights, depth=6).ok

    def test_dimension_mismatch_caught(self, reps3, z2ring):
        r = fr.RestrictionData.from_dict(
            reps3, z2ring,
            {"1": {"e": 1}, "sgn": {"g1": 1}, "rho": {"e": 1}},
            name="bad")
        report = fr.validate_restriction(r)
        assert not report.ok
        assert any(v.witness[0] == "rho" for v in report.violations)

    def test_non_multiplicative_caught(self, repz4, z2ring):
        r = fr.RestrictionData.from_dict(
            repz4, z2ring,
            {"chi0": {"e": 1}, "chi1": {"g1": 1},
             "chi2": {"g1": 1}, "chi3": {"e": 1}},
            name="bad")
        report = fr.validate_restriction(r)
        assert not report.ok


class TestNormality:
    def test_parity_normal(self, parity):
        res = fr.is_normal(parity, depth=6)
        assert res.normal
        assert res.witness is None

    def test_weights_not_normal_witness(self, weights):
        res = fr.is_normal(weights, depth=6)
        assert not res.normal
        assert res.witness[0] == "V2"
        # trivial character appears once inside a 3-dimensional restriction
        assert res.witness[1:] == (1, 3)

    def test_identity_restriction_normal(self, reps3):
        res = fr.is_normal(fr.identity_restriction(reps3))
        assert res.normal


class TestCentrality:
    def test_parity_central_with_assignment(self, parity):
        res = fr.is_central_subgroup(parity, depth=6)
        assert res.central
        assert res.assignment["V0"] == "e"
        assert res.assignment["V1"] == "g1"
        assert res.assignment["V2"] == "e"

    def test_weights_not_central_witness(self, weights):
        res = fr.is_central_subgroup(weights, depth=6)
        assert not res.central
        assert res.witness[0] == "V1"

    def test_central_implies_normal(self, parity, reps3):
        cases = [parity, fr.identity_restriction(reps3)]
        for r in cases:
            if fr.is_central_subgroup(r, depth=6).central:
                assert fr.is_normal(r, depth=6).normal

    def test_cross_check_agreement(self, parity, weights, reps3, repz4):
        unit_ring = fr.group_ring(fr.cyclic_group(1))
        cases = [parity, weights, fr.identity_restriction(reps3),
                 fr.trivial_restriction(repz4, unit_ring)]
        for r in cases:
            assert fr.central_subgroup_cross_check(r, depth=6) in (True, False)


class TestTrivialRestrictionSubobject:
    def test_parity_kernel_is_even_part(self, parity, su2):
        sub = fr.trivial_restriction_subobject(parity, depth=6)
        explored = set(su2.elements(6))
        assert set(sub.members) & explored == {"V0", "V2", "V4", "V6"}

    def test_weights_kernel_is_trivial(self, weights):
        sub = fr.trivial_restriction_subobject(weights, depth=6)
        assert set(sub.members) == {"V0"}

    def test_non_closed_kernel_rejected(self, su2, z2ring):
        # a "restriction" whose trivially-restricting part is not closed
        def rule(label):
            n = int(label[1:])
            if n == 2:
                return {"g1": su2.dim(label)}
            return {"e": su2.dim(label)}

        r = fr.RestrictionData(su2, z2ring, rule, name="broken")
        with pytest.raises(InvalidRestriction):
            fr.trivial_restriction_subobject(r, depth=6)


class TestGrouplikes:
    def test_group_ring_recovers_group(self, s3ring):
        table = fr.grouplikes(s3ring)
        assert table.size == 6
        assert not table.is_abelian()

    def test_rep_s3_grouplikes_are_characters(self, reps3):
        table = fr.grouplikes(reps3)
        assert set(table.labels) == {"1", "sgn"}

    def test_su2_has_only_unit(self, su2):
        table = fr.grouplikes(su2, depth=6)
        assert table.size == 1

    def test_free_product_grouplikes(self, su2, z2ring):
        ring = fr.free_product(su2, z2ring)
        table = fr.grouplikes(ring, depth=4)
        desc = fr.identify_group(table)
        assert desc.order == 2 and desc.abelian_invariants == [2]
