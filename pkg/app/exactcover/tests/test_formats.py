"""
Tests for the system text format.
"""
import os
import tempfile

from django.test import SimpleTestCase

from exactcover import formats
from exactcover.system import build_system, ExactCoverError


SAMPLE = """\
# two rows, three columns
2 3
0 0
0 1
1 1
1 2
rhs 1 2
bounds 1 2 1
"""


class SystemFormatTests(SimpleTestCase):
    """Test reading and writing systems."""

    def test_parse_sample(self):
        """Test the sample text gives the expected system."""
        system = formats.parse_system(SAMPLE)

        self.assertEqual(system.supports, ((0,), (0, 1), (1,)))
        self.assertEqual(system.rhs, (1, 2))
        self.assertEqual(system.bounds, (1, 2, 1))

    def test_file_round_trip(self):
        """Test writing then reading a file preserves the system."""
        system = (build_system(3, 2).add_entry(2, 0).add_entry(0, 1)
                  .set_rhs(1, 4).freeze())
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'system.txt')
            formats.write_system(path, system)
            self.assertEqual(formats.read_system(path), system)

    def test_bad_lines(self):
        """Test malformed text is rejected."""
        with self.assertRaises(ExactCoverError):
            formats.parse_system('')
        with self.assertRaises(ExactCoverError):
            formats.parse_system('1 1\nrhs 1 1\n')
        with self.assertRaises(ExactCoverError):
            formats.parse_system('1 1\n0 x\n')
        with self.assertRaises(ExactCoverError):
            formats.parse_system('1 1\n0 0 0\n')
