"""
Tests for single square and orthogonal pair instances.
"""
import os
import unittest

from django.test import SimpleTestCase

from encoder.cnf import (
    BadClause,
    Cnf,
    DecodeError,
    EncodingError,
    VariableMap,
)
from encoder.squares import EncodeConfig, encode_latin, Mode
from encoder.tests.enumeration import projected_models
from latin import squares
from satengine.options import SolverOptions
from satengine.solver import Solver, Status


LONG_TESTS = os.environ.get('MOLS_LONG_TESTS') == '1'


def square_models(cfg, names=('P',)):
    instance = encode_latin(cfg)
    varmap = instance.varmap
    variables = [v for name in names for v in varmap.square_vars(name)]
    models = projected_models(instance.cnf, variables)
    return instance, models


class CnfTests(SimpleTestCase):
    """Test clause normalisation."""

    def test_duplicates_merge(self):
        cnf = Cnf(3)
        cnf.add_clause([1, -2, 1])

        self.assertEqual(cnf.clauses, [(1, -2)])

    def test_tautology_skipped(self):
        cnf = Cnf(2)

        self.assertFalse(cnf.add_clause([1, 2, -1]))
        self.assertEqual(len(cnf), 0)

    def test_bad_clauses(self):
        cnf = Cnf(2)

        with self.assertRaises(BadClause):
            cnf.add_clause([3])
        with self.assertRaises(BadClause):
            cnf.add_clause([0])
        with self.assertRaises(BadClause):
            cnf.add_clause([])


class VariableMapTests(SimpleTestCase):
    """Test the variable numbering."""

    def test_blocks(self):
        """Test P, R and Q blocks follow each other."""
        varmap = VariableMap(3, ('Q', 'P', 'R'))

        self.assertEqual(varmap.squares, ('P', 'R', 'Q'))
        self.assertEqual(varmap.var('P', 0, 0, 0), 1)
        self.assertEqual(varmap.var('P', 1, 2, 0), 9 + 6 + 1)
        self.assertEqual(varmap.var('R', 0, 0, 0), 28)
        self.assertEqual(varmap.var('Q', 2, 2, 2), 81)
        self.assertEqual(varmap.num_square_vars, 81)

    def test_decode_var(self):
        """Test decode_var inverts var."""
        varmap = VariableMap(4, ('P', 'R', 'Q'))
        for v in range(1, varmap.num_square_vars + 1):
            self.assertEqual(varmap.var(*varmap.decode_var(v)), v)
        self.assertIsNone(varmap.decode_var(varmap.num_square_vars + 1))

    def test_undeclared_square(self):
        with self.assertRaises(EncodingError):
            VariableMap(3).var('Q', 0, 0, 0)

    def test_decode_needs_one_symbol(self):
        varmap = VariableMap(2)
        model = [False] * 9
        for v in (1, 4, 6, 7):
            model[v] = True
        model[2] = True

        with self.assertRaises(DecodeError):
            varmap.decode_square(model, 'P')


class ConfigTests(SimpleTestCase):
    """Test EncodeConfig validation."""

    def test_first_row_permutation(self):
        with self.assertRaises(EncodingError):
            EncodeConfig(order=3, first_row=(0, 0, 1))

    def test_profiles_need_myrvold(self):
        with self.assertRaises(EncodingError):
            EncodeConfig(order=3, mode='pair', profiles=(None, None))

    def test_mate_row_needs_mate(self):
        with self.assertRaises(EncodingError):
            EncodeConfig(order=3, fix_mate_first_row=True)

    def test_modes(self):
        self.assertEqual(EncodeConfig(order=3).squares, ('P',))
        pair = EncodeConfig(order=3, mode=Mode.PAIR)
        self.assertEqual(pair.squares, ('P', 'R', 'Q'))
        self.assertTrue(pair.certifies)
        self.assertFalse(EncodeConfig(order=3).certifies)


class SingleSquareTests(SimpleTestCase):
    """Test model counts of single square instances."""

    def test_order_one(self):
        _, models = square_models(EncodeConfig(order=1))

        self.assertEqual(len(models), 1)

    def test_order_two(self):
        """Test the two order 2 squares, one with a fixed first row."""
        _, models = square_models(EncodeConfig(order=2))
        _, fixed = square_models(EncodeConfig(order=2, first_row=(0, 1)))

        self.assertEqual(len(models), 2)
        self.assertEqual(len(fixed), 1)

    def test_order_three_first_row(self):
        """Test two order 3 squares start 0 1 2, in both encodings."""
        for card in ('pairwise', 'totalizer'):
            cfg = EncodeConfig(order=3, cardinality=card,
                               first_row=(0, 1, 2))
            instance, models = square_models(cfg)
            decoded = {instance.varmap.decode_square(m, 'P') for m in models}
            self.assertEqual(len(models), 2)
            self.assertEqual(len(decoded), 2)
            for square in decoded:
                self.assertEqual(square.row(0), (0, 1, 2))

    def test_order_three_all(self):
        """Test every model decodes to one of the 12 order 3 squares."""
        instance, models = square_models(EncodeConfig(order=3))
        decoded = {instance.varmap.decode_square(m, 'P') for m in models}

        self.assertEqual(decoded, set(squares.all_latin_squares(3)))

    def test_order_four_count(self):
        """Test there are 576 order 4 squares."""
        _, models = square_models(EncodeConfig(order=4))

        self.assertEqual(len(models), 576)

    def test_sampled_orders(self):
        """Test seeded solves up to order 6 decode to valid squares."""
        for n in range(4, 7):
            instance = encode_latin(EncodeConfig(order=n))
            for seed in (0, 1, 2):
                solver = Solver.from_cnf(
                    instance.cnf, SolverOptions(shuffle_seed=seed)
                )
                result = solver.solve()
                self.assertTrue(result.is_sat)
                instance.varmap.decode_square(result.model, 'P')


class PairTests(SimpleTestCase):
    """Test channeled pair instances."""

    def test_channeling_clause_count(self):
        """Test n^4 clauses of the form -R | -P | Q."""
        for n in (3, 4):
            instance = encode_latin(EncodeConfig(order=n, mode='pair'))
            varmap = instance.varmap

            def block(lit):
                return varmap.decode_var(abs(lit))[0]

            channeling = [
                c for c in instance.cnf.clauses
                if len(c) == 3 and c[0] < 0 and c[1] < 0 and c[2] > 0
                and (block(c[0]), block(c[1]), block(c[2]))
                == ('R', 'P', 'Q')
            ]
            self.assertEqual(len(channeling), n ** 4)

    def test_order_three_models(self):
        """Test every pair model is orthogonal and a TRP."""
        cfg = EncodeConfig(order=3, mode='pair', first_row=(0, 1, 2))
        instance, models = square_models(cfg, names=('P', 'R'))
        varmap = instance.varmap

        # Two squares with that first row, six mates each
        self.assertEqual(len(models), 12)
        for model in models:
            p = varmap.decode_square(model, 'P')
            r = varmap.decode_square(model, 'R')
            q = varmap.decode_square(model, 'Q')
            self.assertTrue(squares.are_orthogonal(p, r))
            self.assertTrue(squares.verify_trp(p, q))
            self.assertEqual(
                q, squares.representation_square(
                    p, squares.decompose_trp(p, q)
                )
            )

    def test_fixed_mate_row(self):
        """Test fixing the mate's first row leaves one mate per square."""
        cfg = EncodeConfig(order=3, mode='pair', first_row=(0, 1, 2),
                           fix_mate_first_row=True)
        _, models = square_models(cfg, names=('P', 'R'))

        self.assertEqual(len(models), 2)

    def test_order_two_has_no_pair(self):
        instance = encode_latin(EncodeConfig(order=2, mode='pair'))

        self.assertIs(Solver.from_cnf(instance.cnf).solve().status,
                      Status.UNSAT)

    def test_sampled_pairs(self):
        """Test seeded solves at orders 4 and 5."""
        for n in (4, 5):
            instance = encode_latin(EncodeConfig(
                order=n, mode='pair', first_row=tuple(range(n)),
                fix_mate_first_row=True,
            ))
            for seed in (0, 1):
                result = Solver.from_cnf(
                    instance.cnf, SolverOptions(shuffle_seed=seed)
                ).solve()
                self.assertTrue(result.is_sat)
                p = instance.varmap.decode_square(result.model, 'P')
                r = instance.varmap.decode_square(result.model, 'R')
                q = instance.varmap.decode_square(result.model, 'Q')
                self.assertTrue(squares.are_orthogonal(p, r))
                self.assertTrue(squares.verify_trp(p, q))

    @unittest.skipUnless(LONG_TESTS, 'set MOLS_LONG_TESTS=1')
    def test_order_six_has_no_pair(self):
        """Test no orthogonal pair of order 6 exists."""
        instance = encode_latin(EncodeConfig(
            order=6, mode='pair', first_row=tuple(range(6)),
            fix_mate_first_row=True,
        ))

        self.assertIs(Solver.from_cnf(instance.cnf).solve().status,
                      Status.UNSAT)

    @unittest.skipUnless(LONG_TESTS, 'set MOLS_LONG_TESTS=1')
    def test_order_seven_pair(self):
        instance = encode_latin(EncodeConfig(
            order=7, mode='pair', first_row=tuple(range(7)),
            fix_mate_first_row=True,
        ))
        result = Solver.from_cnf(instance.cnf).solve()

        self.assertTrue(result.is_sat)
        p = instance.varmap.decode_square(result.model, 'P')
        r = instance.varmap.decode_square(result.model, 'R')
        self.assertTrue(squares.are_orthogonal(p, r))
