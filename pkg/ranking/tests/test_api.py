from django.test import TestCase, override_settings
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient


class SortPointsApiTests(TestCase):
    def setUp(self):
        self.client = APIClient()
        self.url = reverse('ranking:sort')

    def test_default_algorithm_is_hybrid(self):
        response = self.client.post(self.url, {'points': [[0, 0], [1, 1], [0, 0]]}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['algorithm'], 'hybrid')
        self.assertEqual(response.data['ranks'], [0, 1, 0])
        self.assertEqual(response.data['levels'], 2)

    def test_every_algorithm_agrees(self):
        points = [[3, 1, 2], [1, 1, 1], [2, 2, 2], [0, 3, 1], [3, 3, 3]]
        checksums = set()
        for algorithm in ('naive', 'bos', 'dc', 'hybrid'):
            response = self.client.post(self.url, {'points': points, 'algorithm': algorithm}, format='json')
            self.assertEqual(response.status_code, status.HTTP_200_OK)
            self.assertEqual(response.data['ranks'], [1, 0, 1, 0, 2])
            checksums.add(response.data['checksum'])
        self.assertEqual(len(checksums), 1)

    def test_policy_override(self):
        payload = {
            'points': [[0, 0, 0], [1, 1, 1]],
            'policy': {'c_left': 0.0, 'c_right': 1e6, 'offset': -10.0},
        }
        response = self.client.post(self.url, payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['ranks'], [0, 1])

    def test_rejects_empty_input(self):
        response = self.client.post(self.url, {'points': []}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('points', response.data)

    def test_rejects_ragged_points(self):
        response = self.client.post(self.url, {'points': [[0, 0], [1, 1, 1]]}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('points', response.data)

    def test_rejects_single_objective(self):
        response = self.client.post(self.url, {'points': [[0], [1]]}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_rejects_unknown_algorithm(self):
        response = self.client.post(self.url, {'points': [[0, 0]], 'algorithm': 'quick'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('algorithm', response.data)

    def test_rejects_bad_exponent(self):
        payload = {'points': [[0, 0]], 'policy': {'exponent': 3.0}}
        response = self.client.post(self.url, payload, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('policy', response.data)


class SwitchIntervalApiTests(TestCase):
    def setUp(self):
        self.client = APIClient()
        self.url = reverse('ranking:switch-interval')

    def test_default_policy(self):
        response = self.client.get(self.url, {'m': 10})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['n_objectives'], 10)
        self.assertAlmostEqual(response.data['n_min'], 23.978952727983707, places=9)
        self.assertAlmostEqual(response.data['n_max'], 1045.65, delta=0.01)
        self.assertTrue(response.data['enabled'])

    def test_three_objectives(self):
        response = self.client.get(self.url, {'m': 3})
        self.assertEqual(response.data['n_max'], 0.0)

    def test_missing_m(self):
        response = self.client.get(self.url)
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_objective_count_below_m(self):
        response = self.client.get(self.url, {'m': 5, 'n_objectives': 3})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    @override_settings(NDS_SWITCH_POLICY={
        'ENABLED': False, 'C_LEFT': 1.0, 'C_RIGHT': 150.0, 'EXPONENT': 0.9, 'OFFSET': 1.5, 'D_MODE': 'm',
    })
    def test_disabled_policy(self):
        response = self.client.get(self.url, {'m': 10})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertFalse(response.data['enabled'])
        self.assertIsNone(response.data['n_min'])
        self.assertIsNone(response.data['n_max'])
