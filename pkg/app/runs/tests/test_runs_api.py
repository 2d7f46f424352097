"""
Tests for the stored run APIs.
"""

from core.models import SolveRun

from django.test import TestCase
from django.urls import reverse

from rest_framework import status
from rest_framework.test import APIClient

from runs.serializers import SolveRunDetailSerializer, SolveRunSerializer


RUNS_URL = reverse('runs:solverun-list')
SUMMARY_URL = reverse('runs:solverun-summary')


def detail_url(run_id):
    """Create and return a run detail URL."""
    return reverse('runs:solverun-detail', args=[run_id])


def create_run(**params):
    """Create and return a stored run."""
    defaults = {
        'method': 'hybrid',
        'order': 8,
        'seed': 1,
        'status': 'sat',
        'total_s': 1.0,
        'ep_calls': 1,
    }
    defaults.update(params)
    return SolveRun.objects.create(**defaults)


class RunsApiTests(TestCase):
    """Test listing, filtering and retrieving runs."""

    def setUp(self):
        self.client = APIClient()

    def test_list(self):
        create_run(seed=1)
        create_run(seed=2)

        res = self.client.get(RUNS_URL)

        runs = SolveRun.objects.all().order_by('-id')
        serializer = SolveRunSerializer(runs, many=True)
        self.assertEqual(res.status_code, status.HTTP_200_OK)
        self.assertEqual(res.data, serializer.data)
        self.assertNotIn('square', res.data[0])

    def test_filters(self):
        """Test method, order and status filters combine."""
        wanted = create_run(method='pure', order=9, status='timeout')
        create_run(method='pure', order=9, status='sat')
        create_run(method='hybrid', order=9, status='timeout')
        create_run(method='pure', order=10, status='timeout')

        res = self.client.get(
            RUNS_URL, {'method': 'pure', 'order': '8,9', 'status': 'timeout'}
        )

        self.assertEqual([r['id'] for r in res.data], [wanted.id])

    def test_detail(self):
        run = create_run(square='order 1\n0\n', mate='order 1\n0\n')

        res = self.client.get(detail_url(run.id))

        self.assertEqual(res.data, SolveRunDetailSerializer(run).data)
        self.assertEqual(res.data['square'], 'order 1\n0\n')

    def test_read_only(self):
        res = self.client.post(RUNS_URL, {'method': 'pure', 'order': 5})

        self.assertEqual(res.status_code, status.HTTP_405_METHOD_NOT_ALLOWED)


class SummaryApiTests(TestCase):
    """Test the per method and order summary."""

    def setUp(self):
        self.client = APIClient()

    def test_summary(self):
        for seed, seconds in enumerate((0.5, 0.3, 0.9), start=1):
            create_run(seed=seed, total_s=seconds, ep_calls=seed)
        create_run(method='pure', seed=1, status='timeout', total_s=60.0)

        res = self.client.get(SUMMARY_URL)

        self.assertEqual(res.status_code, status.HTTP_200_OK)
        by_method = {row['method']: row for row in res.data}
        self.assertEqual(by_method['hybrid']['runs'], 3)
        self.assertEqual(by_method['hybrid']['median_s'], '0.5000')
        self.assertEqual(by_method['hybrid']['median_ep_calls'], 2)
        self.assertEqual(by_method['pure']['solved'], 0)
        self.assertEqual(by_method['pure']['median_s'], 'timeout')

    def test_summary_filtered(self):
        create_run(order=8)
        create_run(order=9)

        res = self.client.get(SUMMARY_URL, {'order': '9'})

        self.assertEqual([row['order'] for row in res.data], [9])
