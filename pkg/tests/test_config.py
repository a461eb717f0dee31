# -*- coding: utf-8 -*-
"""
test_config
----------------------------------

Tests for the settings sources, their layering and the run
configuration built from them.
"""
import argparse
import os
import pickle
import shutil
import tempfile
import unittest
from copy import deepcopy

from derangelab import (BudgetExceeded, Budgets, UsageError, RunConfig,
                        load_run_config)
from derangelab.config import (ENV_PREFIX, FAMILIES, config_file_source,
                               default_settings, load_settings)
from derangelab.configsource import (Commandline, Defaults, Environment,
                                     INIFile, YAMLFile, boolconvert)
from derangelab.settings import LayeredSettings


class SettingsHelperTests(object):

    # untyped sources (INI files, the environment) override this
    typed_keys = ('format', 'jobs', 'timings')

    def _test_singlesection(self, settings):
        if 'jobs' in self.typed_keys:
            self.assertEqual(settings.jobs, 4)
            self.assertIs(settings.timings, True)
        else:
            self.assertEqual(settings.jobs, "4")
            self.assertEqual(settings.timings, "True")
        self.assertEqual(settings.format, "json")

    def _test_typed_by_defaults(self, settings):
        self.assertIs(type(settings.jobs), int)
        self.assertEqual(settings.jobs, 4)
        self.assertIs(settings.timings, True)
        self.assertEqual(settings.format, "json")


class ConfigSourceHelperTests(SettingsHelperTests):

    # concrete test classes set up self.simple and self.complex
    def test_keys(self):
        self.assertEqual(set(self.simple.keys()),
                         set(('format', 'jobs', 'timings')))
        self.assertEqual(set(self.complex.keys()),
                         set(('format', 'jobs', 'timings')))

    def test_subsections(self):
        self.assertEqual(set(self.simple.subsections()), set())
        self.assertEqual(set(self.complex.subsections()),
                         set(('bider', 'sweep')))

    def test_subsection_keys(self):
        self.assertEqual(set(self.complex.subsection('bider').keys()),
                         set(('max_n',)))

    def test_has(self):
        for key in self.simple.keys():
            self.assertTrue(self.simple.has(key))
        self.assertFalse(self.simple.has('nonexistent'))

    def test_typed(self):
        for key in self.simple.keys():
            self.assertEqual(self.simple.typed(key), key in self.typed_keys,
                             key)

    def test_singlesection(self):
        self._test_singlesection(LayeredSettings(self.simple))

    def test_typing_from_defaults(self):
        settings = LayeredSettings(Defaults(default_settings()), self.simple)
        self._test_typed_by_defaults(settings)

    def test_subsections_layered(self):
        settings = LayeredSettings(Defaults(default_settings()), self.complex)
        self.assertEqual(settings.bider.max_n, 4)
        self.assertEqual(settings.sweep.max_n, 6)
        # only in the defaults
        self.assertEqual(settings.perm.max_n, 10)
        with self.assertRaises(AttributeError):
            settings.bider.jobs

    DUMP_WANT = {'format': 'json',
                 'jobs': 4,
                 'timings': True,
                 'perm': {'max_n': 10},
                 'sweep': {'max_n': 6},
                 'bider': {'max_n': 4}}

    def test_dump(self):
        settings = LayeredSettings(Defaults(default_settings()), self.complex)
        self.maxDiff = None
        self.assertEqual(LayeredSettings.dump(settings),
                         deepcopy(self.DUMP_WANT))

    def test_where(self):
        settings = LayeredSettings(Defaults(default_settings()), self.simple)
        self.assertEqual(LayeredSettings.where(settings, 'jobs'),
                         self.simple.identifier)
        self.assertIsNone(LayeredSettings.where(settings, 'max_n'))


class FileHelper(object):

    def setUp(self):
        super(FileHelper, self).setUp()
        self.tempdir = tempfile.mkdtemp()

    def tearDown(self):
        super(FileHelper, self).tearDown()
        shutil.rmtree(self.tempdir)

    def _write(self, name, text):
        path = os.path.join(self.tempdir, name)
        with open(path, "w") as fp:
            fp.write(text)
        return path


class TestDefaults(unittest.TestCase, ConfigSourceHelperTests):

    simple = Defaults({'format': 'json', 'jobs': 4, 'timings': True})

    complex = Defaults({'format': 'json', 'jobs': 4, 'timings': True,
                        'bider': {'max_n': 4},
                        'sweep': {'max_n': 6}})

    def test_type_placeholders(self):
        source = Defaults(default_settings())
        self.assertNotIn('max_n', set(source.keys()))
        self.assertFalse(source.has('max_n'))
        self.assertTrue(source.typed('max_n'))


class TestINIFile(FileHelper, unittest.TestCase, ConfigSourceHelperTests):

    typed_keys = ()

    def setUp(self):
        super(TestINIFile, self).setUp()
        self.simple = INIFile(self._write("simple.ini", """
[__root__]
format = json
jobs = 4
timings = True
"""))
        self.complex = INIFile(self._write("complex.ini", """
[__root__]
format = json
jobs = 4
timings = True

[bider]
max_n = 4

[sweep]
max_n = 6
"""))

    def test_get(self):
        self.assertEqual(self.simple.get("jobs"), "4")
        self.assertEqual(self.complex.subsection("sweep").get("max_n"), "6")

    def test_nonexistent(self):
        with self.assertLogs('derangelab.configsource', 'WARNING'):
            source = INIFile(os.path.join(self.tempdir, "missing.ini"))
        self.assertEqual(list(source.keys()), [])
        self.assertEqual(list(source.subsections()), [])


class TestYAMLFile(FileHelper, unittest.TestCase, ConfigSourceHelperTests):

    def setUp(self):
        super(TestYAMLFile, self).setUp()
        self.simple = YAMLFile(self._write("simple.yaml", """
format: json
jobs: 4
timings: true
"""))
        self.complex = YAMLFile(self._write("complex.yaml", """
format: json
jobs: 4
timings: true
bider:
  max_n: 4
sweep:
  max_n: 6
"""))

    def test_empty_file(self):
        source = YAMLFile(self._write("empty.yaml", ""))
        self.assertEqual(list(source.keys()), [])

    def test_nonexistent(self):
        with self.assertLogs('derangelab.configsource', 'WARNING'):
            source = YAMLFile(os.path.join(self.tempdir, "missing.yaml"))
        self.assertEqual(list(source.keys()), [])


class TestEnvironment(unittest.TestCase, ConfigSourceHelperTests):

    typed_keys = ()

    simple = Environment({'DERANGE_LAB_FORMAT': 'json',
                          'DERANGE_LAB_JOBS': '4',
                          'DERANGE_LAB_TIMINGS': 'True',
                          'HOME': '/root'},
                         prefix=ENV_PREFIX)

    complex = Environment({'DERANGE_LAB_FORMAT': 'json',
                           'DERANGE_LAB_JOBS': '4',
                           'DERANGE_LAB_TIMINGS': 'True',
                           'DERANGE_LAB_BIDER__MAX_N': '4',
                           'DERANGE_LAB_SWEEP__MAX_N': '6',
                           'PATH': '/bin'},
                          prefix=ENV_PREFIX)

    def test_get(self):
        self.assertEqual(self.simple.get("format"), "json")
        self.assertEqual(self.complex.subsection("bider").get("max_n"), "4")


class TestCommandline(unittest.TestCase, ConfigSourceHelperTests):

    # argparse leaves plain strings alone
    typed_keys = ('jobs', 'timings')

    simple = Commandline(argparse.Namespace(format='json', jobs=4,
                                            timings=True, max_n=None))

    complex = Commandline(argparse.Namespace(format='json', jobs=4,
                                             timings=True, max_n=None,
                                             perm_max_n=None,
                                             sweep_max_n=6,
                                             bider_max_n=4),
                          sections=FAMILIES)

    def test_none_is_absent(self):
        self.assertFalse(self.simple.has('max_n'))
        settings = LayeredSettings(Defaults({'max_n': 7}), self.simple)
        self.assertEqual(settings.max_n, 7)


class TestConverters(unittest.TestCase):

    def test_boolconvert(self):
        self.assertIs(boolconvert("Yes"), True)
        self.assertIs(boolconvert(" false "), False)
        self.assertEqual(boolconvert("maybe"), "maybe")


class TestLayered(FileHelper, unittest.TestCase):

    def setUp(self):
        super(TestLayered, self).setUp()
        self.inifile = self._write("lab.ini", """
[__root__]
jobs = 4
format = csv

[bider]
max_n = 3
""")

    def test_precedence(self):
        environ = {'DERANGE_LAB_JOBS': '2'}
        namespace = argparse.Namespace(jobs=3, format=None)
        settings = LayeredSettings(Defaults(default_settings()),
                                   INIFile(self.inifile),
                                   Environment(environ, prefix=ENV_PREFIX),
                                   Commandline(namespace))
        self.assertEqual(settings.jobs, 3)
        self.assertEqual(LayeredSettings.where(settings, 'jobs'),
                         'commandline')
        self.assertEqual(settings.format, 'csv')
        self.assertEqual(settings.bider.max_n, 3)

        settings = LayeredSettings(Defaults(default_settings()),
                                   INIFile(self.inifile),
                                   Environment(environ, prefix=ENV_PREFIX))
        self.assertEqual(settings.jobs, 2)
        self.assertEqual(LayeredSettings.where(settings, 'jobs'),
                         'environment')

    def test_readonly(self):
        settings = LayeredSettings(Defaults(default_settings()))
        with self.assertRaises(AttributeError):
            settings.jobs = 2
        with self.assertRaises(AttributeError):
            settings.nonexistent

    def test_get(self):
        settings = LayeredSettings(Defaults(default_settings()))
        self.assertIsNone(LayeredSettings.get(settings, 'max_n'))
        self.assertEqual(LayeredSettings.get(settings, 'jobs'), 1)


class TestRunConfig(FileHelper, unittest.TestCase):

    def test_defaults(self):
        config = load_run_config(environ={})
        self.assertEqual(config, RunConfig())
        self.assertEqual(config.budgets, Budgets(10, 8, 5))
        self.assertIsNone(config.max_n)

    def test_environment(self):
        config = load_run_config(environ={'DERANGE_LAB_FORMAT': 'json',
                                          'DERANGE_LAB_SWEEP__MAX_N': '7',
                                          'DERANGE_LAB_TIMINGS': 'yes'})
        self.assertEqual(config.output_format, 'json')
        self.assertEqual(config.budgets.sweep_max_n, 7)
        self.assertIs(config.timings, True)

    def test_max_n_overrides_every_family(self):
        namespace = argparse.Namespace(max_n=6, format=None, jobs=None,
                                       timings=None, config=None,
                                       bider_max_n=None)
        config = load_run_config(namespace, environ={})
        self.assertEqual(config.budgets, Budgets(6, 6, 6))
        with self.assertRaises(BudgetExceeded):
            config.budgets.check('sweep', 7)

    def test_ceiling(self):
        budgets = Budgets(perm_max_n=50, sweep_max_n=50, bider_max_n=50)
        self.assertEqual(budgets.limit('perm'), 10)
        self.assertEqual(budgets.limit('bider'), 6)

    def test_budget_error_pickles(self):
        err = pickle.loads(pickle.dumps(BudgetExceeded('perm', 6, 5)))
        self.assertEqual((err.family, err.n, err.limit), ('perm', 6, 5))
        self.assertEqual(str(err), 'n=6 exceeds the perm budget (max n is 5)')
        self.assertEqual(err.exit_status, 3)

    def test_config_file(self):
        path = self._write("lab.yaml", "jobs: 2\nbider:\n  max_n: 4\n")
        config = load_run_config(environ={'DERANGE_LAB_CONFIG': path})
        self.assertEqual(config.jobs, 2)
        self.assertEqual(config.budgets.bider_max_n, 4)
        settings = load_settings(environ={}, configfile=path)
        self.assertEqual(LayeredSettings.where(settings, 'jobs'), 'configfile')

    def test_bad_values(self):
        for environ in ({'DERANGE_LAB_FORMAT': 'xml'},
                        {'DERANGE_LAB_JOBS': '0'},
                        {'DERANGE_LAB_JOBS': 'many'},
                        {'DERANGE_LAB_MAX_N': '0'}):
            with self.assertRaises(UsageError, msg=environ):
                load_run_config(environ=environ)

    def test_bad_config_file(self):
        with self.assertRaises(UsageError):
            config_file_source("lab.toml")
