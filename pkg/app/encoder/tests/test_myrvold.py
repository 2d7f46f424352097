"""
Tests for the Myrvold cardinality layer.
"""
from django.test import SimpleTestCase

from encoder.cardinality import Cardinality
from encoder.cnf import VariableMap
from encoder.instances import encode
from encoder.myrvold import (
    encode_dark_cells,
    encode_myrvold,
    encode_row_types,
)
from encoder.squares import EncodeConfig, UnsupportedProfile
from latin import myrvold
from latin.squares import Cell, decompose_trp, mate_from_transversals
from latin.tests import fixtures
from satengine.solver import Solver, Status


U_PROFILE = myrvold.MyrvoldProfile(fixtures.U_TYPE_COUNTS)
W_PROFILE = myrvold.MyrvoldProfile(fixtures.W_TYPE_COUNTS)


def square_units(varmap, name, square):
    return [
        varmap.var(name, c.row, c.col, square[c]) for c in square.cells()
    ]


def dark_units(varmap, name, dark):
    dark = {Cell(*c) for c in dark}
    return [
        var if cell in dark else -var
        for cell, var in varmap.dark_cells(name)
    ]


class ConfigTests(SimpleTestCase):
    """Test the layer refuses what it cannot encode."""

    def test_order_ten_only(self):
        cfg = EncodeConfig(order=9, mode='myrvold',
                           profiles=(U_PROFILE, W_PROFILE))

        with self.assertRaises(UnsupportedProfile):
            encode(cfg)

    def test_profiles_required(self):
        with self.assertRaises(UnsupportedProfile):
            encode_myrvold(EncodeConfig(order=10, mode='myrvold'))

    def test_mode_required(self):
        with self.assertRaises(UnsupportedProfile):
            encode_myrvold(EncodeConfig(order=10, mode='pair'))

    def test_metadata(self):
        cfg = EncodeConfig(order=10, mode='myrvold', trp_witness=False,
                           profiles=myrvold.resolve_pair_type('XX'))
        instance = encode(cfg)

        self.assertEqual(instance.cnf.metadata['profiles'], 'X/X')
        self.assertEqual(instance.varmap.squares, ('P', 'Q'))
        self.assertEqual(len(instance.varmap.dark), 2 * 10 * 6)


class PublishedPairTests(SimpleTestCase):
    """Test the published pair against full instances."""

    def solve(self, profiles, witness=False, dark_p=fixtures.DARK_U):
        cfg = EncodeConfig(order=10, mode='myrvold', trp_witness=witness,
                           profiles=profiles)
        instance = encode(cfg)
        varmap = instance.varmap
        assumptions = (
            square_units(varmap, 'P', fixtures.SQUARE_U)
            + square_units(varmap, 'Q', fixtures.SQUARE_W)
            + dark_units(varmap, 'P', dark_p)
            + dark_units(varmap, 'Q', fixtures.DARK_W)
        )
        if witness:
            mate = mate_from_transversals(
                fixtures.SQUARE_U,
                decompose_trp(fixtures.SQUARE_U, fixtures.SQUARE_W),
            )
            assumptions += square_units(varmap, 'R', mate)
        solver = Solver.from_cnf(instance.cnf)
        return instance, solver.solve(assumptions=assumptions)

    def test_pair_satisfies_its_profiles(self):
        instance, result = self.solve((U_PROFILE, W_PROFILE))

        self.assertTrue(result.is_sat)
        self.assertEqual(
            instance.varmap.decode_square(result.model, 'Q'),
            fixtures.SQUARE_W,
        )
        self.assertEqual(
            instance.varmap.decode_dark(result.model, 'P'),
            frozenset(Cell(*c) for c in fixtures.DARK_U),
        )

    def test_swapped_profiles(self):
        """Test the pair fails when the profiles trade places."""
        _, result = self.solve((W_PROFILE, U_PROFILE))

        self.assertIs(result.status, Status.UNSAT)

    def test_with_witness(self):
        """Test the mate built from the decomposition fits the channel."""
        _, result = self.solve((U_PROFILE, W_PROFILE), witness=True)

        self.assertTrue(result.is_sat)

    def test_witness_checks_dark_counts(self):
        """Test darks that keep the white tally but break types fail."""
        moved = myrvold.colour(fixtures.SQUARE_U, fixtures.DARK_U_MOVED)
        family = decompose_trp(fixtures.SQUARE_U, fixtures.SQUARE_W)
        self.assertTrue(myrvold.check_family(moved, U_PROFILE, family))

        _, result = self.solve((U_PROFILE, W_PROFILE), witness=True,
                               dark_p=fixtures.DARK_U_MOVED)

        self.assertIs(result.status, Status.UNSAT)

    def test_witness_finds_dark_cells(self):
        """Test free dark cells come back as a colouring meeting U."""
        cfg = EncodeConfig(order=10, mode='myrvold',
                           profiles=(U_PROFILE, W_PROFILE))
        instance = encode(cfg)
        varmap = instance.varmap
        mate = mate_from_transversals(
            fixtures.SQUARE_U,
            decompose_trp(fixtures.SQUARE_U, fixtures.SQUARE_W),
        )
        assumptions = (
            square_units(varmap, 'P', fixtures.SQUARE_U)
            + square_units(varmap, 'Q', fixtures.SQUARE_W)
            + square_units(varmap, 'R', mate)
        )

        result = Solver.from_cnf(instance.cnf).solve(assumptions=assumptions)

        self.assertTrue(result.is_sat)
        colouring = myrvold.colour(
            fixtures.SQUARE_U, varmap.decode_dark(result.model, 'P')
        )
        family = decompose_trp(fixtures.SQUARE_U, fixtures.SQUARE_W)
        self.assertEqual(
            myrvold.check_family(colouring, U_PROFILE, family), []
        )


class RowTypeTests(SimpleTestCase):
    """Test row types on white tail indicators alone."""

    def instance(self, profile):
        varmap = VariableMap(10, ('P',))
        cnf = varmap.new_cnf()
        encode_row_types(cnf, varmap, 'P', profile, Cardinality.PAIRWISE)
        return cnf, varmap

    def whites(self, varmap, per_row):
        """Assume per_row[r] white tail cells at the front of row r."""
        lits = []
        for r, count in enumerate(per_row):
            for offset, j in enumerate(myrvold.TAIL_COLUMNS):
                w = varmap.white[('P', r, j)]
                lits.append(w if offset < count else -w)
        return lits

    def test_single_type(self):
        """Test a p1-only profile rejects a row with two whites."""
        cnf, varmap = self.instance(myrvold.MyrvoldProfile.of({'p1': 10}))
        solver = Solver.from_cnf(cnf)

        self.assertTrue(solver.solve(self.whites(varmap, [1] * 10)).is_sat)
        self.assertIs(
            solver.solve(self.whites(varmap, [2] + [1] * 9)).status,
            Status.UNSAT,
        )

    def test_mixed_types(self):
        """Test X needs four p1 rows and six p2 rows."""
        cnf, varmap = self.instance(myrvold.PROFILE_PRESETS['X'])
        solver = Solver.from_cnf(cnf)

        self.assertTrue(
            solver.solve(self.whites(varmap, [1] * 4 + [2] * 6)).is_sat
        )
        self.assertTrue(
            solver.solve(self.whites(varmap, [2, 1] * 3 + [2, 2, 2, 1]))
            .is_sat
        )
        self.assertIs(
            solver.solve(self.whites(varmap, [1] * 5 + [2] * 5)).status,
            Status.UNSAT,
        )
        self.assertIs(
            solver.solve(self.whites(varmap, [3] + [1] * 3 + [2] * 6))
            .status,
            Status.UNSAT,
        )


class DarkCellTests(SimpleTestCase):
    """Test dark cell quotas and colours."""

    def setUp(self):
        self.varmap = VariableMap(10, ('P',))
        self.cnf = self.varmap.new_cnf()
        encode_dark_cells(self.cnf, self.varmap, 'P',
                          myrvold.DEFAULT_DARK_QUOTA)
        self.solver = Solver.from_cnf(self.cnf)

    def dark(self, i, j):
        return self.varmap.dark[('P', i, j)]

    def test_quota(self):
        two = [self.dark(0, 0), self.dark(1, 0)]
        three = two + [self.dark(2, 0)]

        self.assertTrue(self.solver.solve(two).is_sat)
        self.assertIs(self.solver.solve(three).status, Status.UNSAT)

    def test_dark_cells_are_not_white(self):
        white = self.varmap.var('P', 0, 0, 0)
        black = self.varmap.var('P', 0, 0, 5)

        self.assertIs(
            self.solver.solve([self.dark(0, 0), white]).status,
            Status.UNSAT,
        )
        self.assertTrue(self.solver.solve([self.dark(0, 0), black]).is_sat)

    def test_tail_columns_have_no_dark_cells(self):
        self.assertNotIn(('P', 0, 6), self.varmap.dark)
