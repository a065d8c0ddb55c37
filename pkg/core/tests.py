import json
import os
import tempfile
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import InvalidInput
from core.management.base import (
    EXIT_CONSTRUCTION_ERROR,
    EXIT_INVALID_INPUT,
    EXIT_VERIFICATION_FAILED,
    parse_budgets,
)
from core.serializers import load_job
from walls.export import dot_counts

DIHEDRAL = {'invariant_factors': [], 'beta': None}
REFLECTIONS = [{'word': 'b'}, {'word': 'a b'}, {'word': 'a a a b'}]


class JobFileTests(SimpleTestCase):
    def test_elements_and_words(self):
        job = load_job({
            'group': {'invariant_factors': [2], 'beta': [1]},
            'gens': [{'word': 'b'}, {'k': [1], 'i': 1, 'eps': 1}],
            'symmetrize': True,
        })
        self.assertEqual(len(job.genset), 4)
        self.assertEqual(job.format, 'json')
        self.assertIsNone(job.radius)

    def test_malformed_beta(self):
        with self.assertRaises(InvalidInput):
            load_job({'group': {'invariant_factors': [4], 'beta': [1]}, 'gens': [{'word': 'b'}]})

    def test_non_generating_set(self):
        with self.assertRaises(InvalidInput):
            load_job({'group': DIHEDRAL, 'gens': [{'word': 'b'}]})

    def test_unknown_command(self):
        with self.assertRaises(InvalidInput):
            load_job({'group': DIHEDRAL, 'gens': REFLECTIONS, 'command': 'solve'})

    def test_ray_is_parsed(self):
        job = load_job({
            'group': DIHEDRAL,
            'gens': [{'word': 'b'}, {'word': "b'"}],
            'ray': {'motif': [{}, {'eps': 1}], 'period': {'i': 1}, 'labels': [0, 1]},
        })
        self.assertEqual(job.ray.period, job.group.a)
        self.assertEqual(job.ray.motif[1], job.group.b)

    def test_budgets(self):
        self.assertEqual(parse_budgets(['coverage_bound=10']), {'COVERAGE_BOUND': 10})
        with self.assertRaises(InvalidInput):
            parse_budgets(['NOPE=1'])
        with self.assertRaises(InvalidInput):
            parse_budgets(['COVERAGE_BOUND=many'])


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = directory.name

    def job_file(self, payload, name='job.json'):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(payload, handle)
        return path

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as caught:
            self.run_command(*args, **options)
        self.assertEqual(caught.exception.returncode, code)
        return caught.exception


class GroupInfoTests(CommandTestCase):
    def test_infinite_dihedral(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS})
        summary = json.loads(self.run_command('group_info', path))
        self.assertEqual(summary['kind'], 'infinite dihedral')
        self.assertEqual(summary['degree'], 3)
        self.assertTrue(summary['case'].startswith('case1'))
        self.assertEqual(summary['generators'][0]['order'], 2)

    def test_text_format(self):
        path = self.job_file({'group': {'invariant_factors': [2], 'beta': [1]}, 'gens': [{'word': 'a'}, {'word': 'b'}], 'symmetrize': True})
        output = self.run_command('group_info', path, format='text')
        self.assertIn('generalized quasi-dihedral', output)
        self.assertIn('order 4', output)

    def test_malformed_beta(self):
        path = self.job_file({'group': {'invariant_factors': [4], 'beta': [1]}, 'gens': [{'word': 'b'}]})
        self.assertExitCode(EXIT_INVALID_INPUT, 'group_info', path)

    def test_missing_file(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'group_info', os.path.join(self.directory, 'absent.json'))

    def test_broken_json(self):
        path = os.path.join(self.directory, 'broken.json')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write('{"group": ')
        self.assertExitCode(EXIT_INVALID_INPUT, 'group_info', path)


class HamRayTests(CommandTestCase):
    def test_base_case(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': [{'word': 'b'}, {'word': "b'"}]})
        payload = json.loads(self.run_command('ham_ray', path))
        self.assertTrue(payload['report']['passed'])
        self.assertEqual(len(payload['ray']['motif']), 2)

    def test_three_reflections(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS, 'radius': 12, 'inner_radius': 10})
        payload = json.loads(self.run_command('ham_ray', path))
        self.assertTrue(payload['report']['passed'])
        self.assertEqual(payload['report']['checked_inner_radius'], 10)

    def test_dot_output(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS})
        text = self.run_command('ham_ray', path, format='dot', radius=4, inner_radius=3)
        nodes, edges = dot_counts(text)
        self.assertGreater(nodes, 0)
        self.assertGreater(edges, 0)
        self.assertIn('red', text)

    def test_text_format_is_refused(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS})
        error = self.assertExitCode(EXIT_INVALID_INPUT, 'ham_ray', path, format='text')
        self.assertIn('json or dot', str(error))
        with self.assertRaises(CommandError):
            self.run_command('ham_ray', path, '--format', 'text')

    def test_inner_radius_too_large(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS})
        self.assertExitCode(EXIT_INVALID_INPUT, 'ham_ray', path, radius=5, inner_radius=5)

    def test_budget_exhaustion(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': REFLECTIONS})
        self.assertExitCode(EXIT_CONSTRUCTION_ERROR, 'ham_ray', path, budget=['WINDOW_VERTEX_BUDGET=3'])


class HamCircleTests(CommandTestCase):
    def test_circle(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': [{'word': 'a'}, {'word': 'b'}], 'symmetrize': True})
        payload = json.loads(self.run_command('ham_circle', path))
        self.assertTrue(payload['report']['passed'])
        self.assertIn('second', payload['circle'])

    def test_format_from_the_job_file_must_be_rendered(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': [{'word': 'a'}, {'word': 'b'}], 'symmetrize': True, 'format': 'text'})
        self.assertExitCode(EXIT_INVALID_INPUT, 'ham_circle', path)

    def test_degree_two(self):
        path = self.job_file({'group': DIHEDRAL, 'gens': [{'word': 'b'}, {'word': "b'"}]})
        error = self.assertExitCode(EXIT_INVALID_INPUT, 'ham_circle', path)
        self.assertIn('degree < 3', str(error))


class WallTests(CommandTestCase):
    def test_column_overlay(self):
        text = self.run_command('wall', k=4, l=4, show='column')
        nodes, edges = dot_counts(text)
        self.assertEqual(nodes, 4 * 17)
        self.assertIn('blue', text)

    def test_iso_rows(self):
        text = self.run_command('wall', k=4, l=2, show='iso-rows')
        for colour in ('blue', 'darkgreen', 'orange'):
            self.assertIn(colour, text)

    def test_json(self):
        payload = json.loads(self.run_command('wall', k=3, l=1, show='ray', format='json'))
        self.assertEqual(len(payload['vertices']), 3 * 17)
        self.assertTrue(any(edge['highlight'] for edge in payload['edges']))

    def test_odd_parameters(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'wall', k=3, l=2)

    def test_plain_wall_overlay(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'wall', k=3, show='column')


class VerifyCommandTests(CommandTestCase):
    def test_cylinder(self):
        payload = json.loads(self.run_command('verify', k=4, l=2))
        self.assertTrue(payload['report']['passed'])

    def test_grid_circle(self):
        payload = json.loads(self.run_command('verify', k=3, grid=True, construction='circle'))
        self.assertTrue(payload['report']['passed'])

    def test_broken_ray(self):
        path = self.job_file({
            'group': DIHEDRAL,
            'gens': [{'word': 'b'}, {'word': "b'"}],
            'ray': {'motif': [{}], 'period': {'i': 1}, 'labels': [0]},
        })
        self.assertExitCode(EXIT_VERIFICATION_FAILED, 'verify', path)

    def test_job_ray_passes(self):
        path = self.job_file({
            'group': DIHEDRAL,
            'gens': [{'word': 'b'}, {'word': "b'"}],
            'ray': {'motif': [{}, {'eps': 1}], 'period': {'i': 1}, 'labels': [0, 1]},
        })
        payload = json.loads(self.run_command('verify', path))
        self.assertTrue(payload['report']['passed'])

    def test_only_json_reports(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'verify', k=4, l=2, format='dot')

    def test_nothing_to_verify(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'verify')


class SampleJobsTests(CommandTestCase):
    def test_seeded_sample(self):
        first = json.loads(self.run_command('sample_jobs', count=3, seed=11))
        second = json.loads(self.run_command('sample_jobs', count=3, seed=11))
        self.assertEqual(first, second)
        self.assertEqual(len(first), 3)
        for job in first:
            self.assertGreaterEqual(len(load_job(job).genset), 2)

    def test_rejects_bad_count(self):
        self.assertExitCode(EXIT_INVALID_INPUT, 'sample_jobs', count=0)


class SettingsTests(SimpleTestCase):
    def test_no_auth_apps(self):
        self.assertNotIn('django.contrib.auth', settings.INSTALLED_APPS)
        self.assertNotIn('django.contrib.contenttypes', settings.INSTALLED_APPS)
        self.assertEqual(settings.REST_FRAMEWORK['DEFAULT_AUTHENTICATION_CLASSES'], [])
