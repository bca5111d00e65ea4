import itertools

import numpy as np
import pytest

from disingquandle import (
    OrientedDisingquandle,
    OrientedSingquandle,
    StructureError,
    builtin,
    right_inverse_table,
    validate_oriented_disingquandle,
    validate_oriented_singquandle,
    validate_quandle,
)

import _oracles


def trivial(n):
    return np.tile(np.arange(n)[:, None], (1, n))


def dihedral(n):
    r = np.arange(n)
    return (2 * r[None, :] - r[:, None]) % n


def affine(n, a, b):
    r = np.arange(n)
    return (a * r[:, None] + b * r[None, :]) % n


class TestValidateQuandle:
    def test_trivial_passes(self):
        assert validate_quandle(trivial(3)).passed

    def test_dihedral_passes(self):
        assert validate_quandle(dihedral(3)).passed

    def test_two_element_table_fails_column_bijectivity_only(self):
        # 0*0=0 and 1*1=1, so idempotency holds; column 0 sends both 0 and 1 to 0
        report = validate_quandle([[0, 1], [0, 1]])
        assert report["idempotency"].passed
        assert not report["column_bijectivity"].passed
        assert report["column_bijectivity"].counterexample == (0, 1, 0)
        assert report.first_failure().axiom == "column_bijectivity"

    def test_idempotency_counterexample(self):
        report = validate_quandle([[1, 1], [0, 0]])
        assert report["idempotency"].counterexample == (0,)

    def test_self_distributivity_smallest_counterexample(self):
        def sd(t, x, y, z):
            return t[t[x][y]][z] == t[t[x][z]][t[y][z]]

        # first order-3 table that is idempotent and column-bijective but not a quandle
        t = next(
            t for t in _oracles.all_tables(3)
            if all(t[i][i] == i for i in range(3))
            and all(len({t[x][y] for x in range(3)}) == 3 for y in range(3))
            and not _oracles.naive_is_quandle(t)
        )
        res = validate_quandle(t)["self_distributivity"]
        assert not res.passed
        first_bad = next(c for c in itertools.product(range(3), repeat=3) if not sd(t, *c))
        assert res.counterexample == first_bad

    def test_matches_naive_on_all_order_two_tables(self):
        for t in _oracles.all_tables(2):
            assert validate_quandle(t).passed == _oracles.naive_is_quandle(t)

    def test_non_square_is_structural(self):
        with pytest.raises(StructureError):
            validate_quandle([[0, 1, 0], [1, 0, 1]])

    def test_out_of_range_is_structural(self):
        with pytest.raises(StructureError):
            validate_quandle([[0, 2], [1, 1]])

    def test_pure(self):
        t = dihedral(5)
        assert validate_quandle(t) == validate_quandle(t)


class TestRightInverse:
    def test_trivial(self):
        assert np.array_equal(right_inverse_table(trivial(4)), trivial(4))

    def test_z10_closed_form(self):
        assert np.array_equal(right_inverse_table(affine(10, 3, -2)), affine(10, 7, -6))

    def test_z60_closed_form(self):
        bar = right_inverse_table(affine(60, 7, -6))
        assert np.array_equal(bar, affine(60, -17, 18))
        assert np.array_equal(bar, affine(60, 43, 18))

    def test_cancellation(self):
        t = affine(30, 13, -12)
        b = right_inverse_table(t)
        r = np.arange(30)
        assert np.array_equal(b[t, r[None, :]], np.tile(r[:, None], (1, 30)))
        assert np.array_equal(t[b, r[None, :]], np.tile(r[:, None], (1, 30)))

    def test_non_bijective_column_named(self):
        with pytest.raises(StructureError, match="column 0"):
            right_inverse_table([[0, 1], [0, 1]])


class TestSingquandle:
    def test_trivial_projections_pass(self):
        n = 4
        r = np.arange(n)
        s = OrientedSingquandle(trivial(n), np.tile(r[:, None], (1, n)), np.tile(r[None, :], (n, 1)))
        assert validate_oriented_singquandle(s).passed

    def test_z10_example(self):
        star = affine(10, 3, -2)
        r1 = np.array(_oracles.poly_table(10, (0, 4, 2, 0, 0, 5)))
        r2 = np.array(_oracles.poly_table(10, (0, 6, 0, 0, 0, 5)))
        assert validate_oriented_singquandle(OrientedSingquandle(star, r1, r2)).passed

    def test_perturbed_r2_fails_r2_from_r1(self):
        star = affine(10, 3, -2)
        r1 = np.array(_oracles.poly_table(10, (0, 4, 2, 0, 0, 5)))
        r2 = np.array(_oracles.poly_table(10, (0, 6, 0, 0, 0, 5)))
        assert r2[0, 1] != 1
        r2[0, 1] = 1
        report = validate_oriented_singquandle(OrientedSingquandle(star, r1, r2))
        assert not report.passed
        assert report["r2_from_r1"].counterexample == (0, 1)

    def test_report_lists_each_axiom(self):
        s = builtin("z10_canonical").singquandle(1)
        axioms = validate_oriented_singquandle(s).axioms
        for name in ("r1_conjugation", "r2_conjugation", "pass_through", "r2_from_r1", "exchange"):
            assert name in axioms

    def test_non_quandle_does_not_crash(self):
        s = OrientedSingquandle([[0, 1], [0, 1]], trivial(2), trivial(2))
        report = validate_oriented_singquandle(s)
        assert not report.passed
        assert "not checked" in report["r1_conjugation"].detail

    def test_mismatched_sizes(self):
        with pytest.raises(StructureError):
            OrientedSingquandle(trivial(3), trivial(2), trivial(3))


class TestDisingquandle:
    @pytest.mark.parametrize("name", ["z10_canonical", "z10_uno", "z30", "z60"])
    def test_builtins_pass(self, name):
        assert validate_oriented_disingquandle(builtin(name)).passed

    def test_z10_canonical_agrees_with_naive(self):
        d = builtin("z10_canonical")
        assert _oracles.naive_disingquandle_ok(*(t.tolist() for t in (d.star1, d.star2, d.r1, d.r2)))

    def test_dihedral_trivial_mix_fails_mixed_axiom(self):
        r = np.arange(3)
        d = OrientedDisingquandle(dihedral(3), trivial(3), np.tile(r[:, None], (1, 3)), np.tile(r[None, :], (3, 1)))
        report = validate_oriented_disingquandle(d)
        assert not report.passed
        failed = {f.axiom for f in report.failures()}
        mixed = {"mixed_pass_through_12", "mixed_pass_through_21", "mixed_exchange_12", "mixed_exchange_21"}
        assert failed & mixed
        assert report["mixed_exchange_12"].counterexample == (0, 1)
        assert not _oracles.naive_disingquandle_ok(*(t.tolist() for t in (d.star1, d.star2, d.r1, d.r2)))

    def test_sub_reports_are_prefixed(self):
        axioms = validate_oriented_disingquandle(builtin("z10_canonical")).axioms
        assert "star1/exchange" in axioms and "star2/exchange" in axioms
        assert "r2_label_symmetry" in axioms

    def test_counterexample_satisfies_definition(self):
        d = builtin("z10_canonical")
        r2 = d.r2.copy()
        r2[3, 7] = (r2[3, 7] + 1) % 10
        report = validate_oriented_disingquandle(OrientedDisingquandle(d.star1, d.star2, d.r1, r2))
        x, y = report["star1/r2_from_r1"].counterexample
        assert r2[x, y] != d.r1[y, d.star1[x, y]]

    def test_report_serializes(self):
        report = validate_oriented_disingquandle(builtin("z10_canonical"))
        data = report.to_dict()
        assert data["passed"] is True
        assert len(data["results"]) == len(report)

    def test_op_symbols(self):
        d = builtin("z10_canonical")
        assert np.array_equal(d.op("*1"), d.star1)
        assert np.array_equal(d.op("/2"), d.star2_bar)
        assert np.array_equal(d.op("R2"), d.r2)
        with pytest.raises(KeyError):
            d.op("R3")

    def test_tables_are_read_only(self):
        d = builtin("z10_canonical")
        with pytest.raises(ValueError):
            d.star1[0, 0] = 1

    def test_equality_and_hash(self):
        a, b = builtin("z10_canonical"), builtin("z10_canonical")
        assert a == b and hash(a) == hash(b)
        assert a != builtin("z10_uno")
