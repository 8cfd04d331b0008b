import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from src.config import ENV_STEP_BUDGET, EngineConfig, SuiteConfig, load_config


class TestLoadConfig(unittest.TestCase):
    def write_toml(self, tmp, text):
        path = Path(tmp) / "config.toml"
        path.write_text(text, encoding="utf-8")
        return path

    def test_defaults_without_file(self):
        with tempfile.TemporaryDirectory() as tmp, mock.patch.dict(os.environ, {}, clear=True):
            config = load_config(Path(tmp) / "missing.toml")
        self.assertEqual(config, EngineConfig())
        self.assertEqual(config.step_budget, 20000)

    def test_precedence(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = self.write_toml(tmp, "[engine]\nstep_budget = 50\nmax_workers = 2\n")
            with mock.patch.dict(os.environ, {}, clear=True):
                self.assertEqual(load_config(path).step_budget, 50)
            with mock.patch.dict(os.environ, {ENV_STEP_BUDGET: "70"}):
                config = load_config(path)
                self.assertEqual(config.step_budget, 70)
                self.assertEqual(config.max_workers, 2)
                self.assertEqual(load_config(path, step_budget=90).step_budget, 90)
                self.assertEqual(load_config(path, step_budget=None).step_budget, 70)

    def test_unknown_key(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = self.write_toml(tmp, "[engine]\nstep_limit = 5\n")
            with self.assertRaises(ValueError):
                load_config(path)

    def test_invalid_env(self):
        with mock.patch.dict(os.environ, {ENV_STEP_BUDGET: "many"}):
            with self.assertRaises(ValueError):
                load_config()

    def test_frozen(self):
        with self.assertRaises(Exception):
            EngineConfig().step_budget = 1


class TestSuiteConfig(unittest.TestCase):
    def test_exact_only(self):
        suite = SuiteConfig.exact_only()
        self.assertFalse(suite.include_numeric)
        self.assertFalse(suite.include_growth)
        self.assertTrue(suite.include_exact)

    def test_acceptance_grid(self):
        suite = SuiteConfig()
        self.assertEqual(suite.eq21_T, (0.25, 1.0, 4.0))
        self.assertEqual(suite.p6_W, (0.5, 1.0, 4.0))
        self.assertEqual(suite.kappaj_max, 6)
        self.assertEqual(len(suite.measures), 5)


if __name__ == '__main__':
    unittest.main()
