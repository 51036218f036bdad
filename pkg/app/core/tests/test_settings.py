from django.apps import apps
from django.conf import settings
from django.test import SimpleTestCase

from core.blaschke import random_blaschke
from factorization.reports import analyze
from factorization.serializers import AnalysisReportSerializer


class SettingsTests(SimpleTestCase):

    def test_no_user_or_content_type_apps(self):
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertFalse(apps.is_installed('django.contrib.contenttypes'))
        self.assertEqual(settings.DATABASES, {})

    def test_report_serializes_without_auth(self):
        report = analyze(random_blaschke(3, rng=4))

        data = AnalysisReportSerializer(report).data

        self.assertEqual(data['degree'], 3)
        self.assertEqual([s['order'] for s in data['normal_subgroups']],
                         data['normal_subgroup_orders'])
