"""
Tests for single pure and hybrid runs.
"""
from django.test import SimpleTestCase

from core.runner import (
    _check_profile,
    encode_config,
    execute,
    RECORD_FIELDS,
    RunError,
    RunTask,
)
from encoder.squares import Mode
from latin import myrvold
from latin.squares import are_orthogonal, decompose_trp, verify_trp
from latin.tests import fixtures


class EncodeConfigTests(SimpleTestCase):
    """Test the instance each kind of task searches."""

    def test_pure(self):
        cfg = encode_config(RunTask('pure', 5))

        self.assertIs(cfg.mode, Mode.PAIR)
        self.assertEqual(cfg.first_row, (0, 1, 2, 3, 4))
        self.assertTrue(cfg.fix_mate_first_row)

    def test_hybrid(self):
        cfg = encode_config(RunTask('hybrid', 5, cardinality='totalizer'))

        self.assertIs(cfg.mode, Mode.SINGLE)
        self.assertEqual(cfg.first_row, (0, 1, 2, 3, 4))
        self.assertEqual(cfg.cardinality.value, 'totalizer')

    def test_myrvold(self):
        """Test Myrvold runs fix no rows and only pure runs carry R."""
        profiles = myrvold.resolve_pair_type('XX')
        hybrid = encode_config(RunTask('hybrid', 10, profiles=profiles))
        pure = encode_config(RunTask('pure', 10, profiles=profiles))

        self.assertIs(hybrid.mode, Mode.MYRVOLD)
        self.assertIsNone(hybrid.first_row)
        self.assertEqual(hybrid.squares, ('P', 'Q'))
        self.assertEqual(pure.squares, ('P', 'R', 'Q'))

    def test_label(self):
        self.assertEqual(RunTask('pure', 8).label, 'n8')
        self.assertEqual(
            RunTask('pure', 10, pair_type='XX').label, 'n10-XX'
        )


class ExecuteTests(SimpleTestCase):
    """Test outcomes of small searches."""

    def test_hybrid_order_three(self):
        outcome = execute(RunTask('hybrid', 3, seed=1))

        self.assertEqual(outcome.status, 'sat')
        self.assertEqual(outcome.ep_calls, 1)
        self.assertTrue(are_orthogonal(outcome.square, outcome.mate))
        self.assertTrue(
            verify_trp(outcome.square, outcome.representation)
        )
        self.assertGreaterEqual(outcome.total_s, outcome.sat_s)

    def test_pure_order_three(self):
        outcome = execute(RunTask('pure', 3))

        self.assertEqual(outcome.status, 'sat')
        self.assertEqual(outcome.ep_calls, 0)
        self.assertEqual(outcome.mate.row(0), (0, 1, 2))
        self.assertEqual(len(outcome.transversals), 3)
        self.assertIn('status=sat', outcome.stats_line)

    def test_order_two(self):
        for method in ('pure', 'hybrid'):
            with self.subTest(method=method):
                self.assertEqual(execute(RunTask(method, 2)).status, 'unsat')

    def test_zero_timeout(self):
        outcome = execute(RunTask('pure', 6, timeout=0))

        self.assertEqual(outcome.status, 'timeout')
        self.assertIsNone(outcome.square)

    def test_exhausted_node_budget(self):
        """Test an Euler-Parker budget hit ends the run as a timeout."""
        outcome = execute(RunTask('hybrid', 5, ep_node_budget=1))

        self.assertEqual(outcome.status, 'timeout')

    def test_record(self):
        outcome = execute(RunTask('hybrid', 3, seed=4))
        record = outcome.record()

        self.assertEqual(tuple(record), RECORD_FIELDS)
        self.assertEqual(record['instance'], 'n3')
        self.assertEqual(record['seed'], 4)
        self.assertEqual(record['status'], 'sat')
        self.assertEqual(record['ep_calls'], 1)
        self.assertEqual(record['blocked_squares'], 0)

    def test_stats_line(self):
        """Test stats.txt names the run as well as its numbers."""
        for method in ('pure', 'hybrid'):
            with self.subTest(method=method):
                outcome = execute(RunTask(method, 3, seed=5))
                pairs = dict(
                    item.split('=', 1)
                    for item in outcome.stats_line.split()
                )

                self.assertEqual(pairs['seed'], '5')
                self.assertEqual(pairs['mode'], method)
                self.assertEqual(pairs['pair_type'], '-')
                self.assertEqual(pairs['status'], 'sat')
                for key in ('total_time', 'sat_time', 'ep_stage1_time',
                            'ep_stage2_time', 'ep_calls',
                            'blocked_squares'):
                    self.assertIn(key, pairs)
                self.assertEqual(int(pairs['ep_calls']), outcome.ep_calls)


class ProfileCheckTests(SimpleTestCase):
    """Test decoded Myrvold decompositions are checked type by type."""

    def setUp(self):
        self.family = decompose_trp(fixtures.SQUARE_U, fixtures.SQUARE_W)
        self.profile = myrvold.MyrvoldProfile(fixtures.U_TYPE_COUNTS)

    def test_matching_profile(self):
        colouring = myrvold.colour(fixtures.SQUARE_U, fixtures.DARK_U)

        _check_profile(colouring, self.profile, self.family, 'P')

    def test_other_profile(self):
        colouring = myrvold.colour(fixtures.SQUARE_U, fixtures.DARK_U)
        profile = myrvold.MyrvoldProfile(fixtures.W_TYPE_COUNTS)

        with self.assertRaises(RunError):
            _check_profile(colouring, profile, self.family, 'P')

    def test_white_tally_alone_is_not_enough(self):
        """Test moved dark cells fail although the white tails tally."""
        colouring = myrvold.colour(
            fixtures.SQUARE_U, fixtures.DARK_U_MOVED
        )

        with self.assertRaises(RunError) as ctx:
            _check_profile(colouring, self.profile, self.family, 'P')

        self.assertIn('dark cells', str(ctx.exception))
