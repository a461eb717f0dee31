# -*- coding: utf-8 -*-
"""
test_cli
----------------------------------

Runs the command line front end in process and checks what it writes
and the exit status it returns.
"""
import io
import json
import unittest

from derangelab.cli import main, parse_range, parse_set
from derangelab.errors import UsageError


class CommandlineHelper(object):

    def _run(self, argv, environ=None, status=0):
        out = io.StringIO()
        got = main(argv, environ=environ or {}, stdout=out)
        self.assertEqual(got, status, out.getvalue())
        return out.getvalue()

    def _records(self, argv, environ=None, status=0):
        text = self._run(["--format", "json"] + argv, environ, status)
        return [json.loads(line) for line in text.splitlines()]


class Trace(unittest.TestCase, CommandlineHelper):

    def test_psi_text(self):
        self.assertEqual(self._run(["trace", "1133535", "psi"]),
                         "map=psi input=1133535 output=1113535 case=C1_2 "
                         "image_case=C2_2 touched_position=3\n")

    def test_kappa(self):
        self.assertEqual(self._records(["trace", "3142", "kappa"]),
                         [{"map": "kappa", "input": "3142",
                           "output": "1342"}])
        # decisive permutations are fixed
        self.assertEqual(self._records(["trace", "2143", "kappa"])[0]["output"],
                         "2143")

    def test_beta(self):
        self.assertEqual(self._records(["trace", "323121", "beta"])[0],
                         {"map": "beta", "input": "323121",
                          "output": "233121"})

    def test_options_after_subcommand(self):
        text = self._run(["trace", "3142", "kappa", "--format", "csv"])
        self.assertEqual(text, "map,input,output\nkappa,3142,1342\n")

    def test_not_in_domain(self):
        # 12 encodes the identity, which is not a derangement
        self._run(["trace", "12", "psi"], status=4)
        self._run(["trace", "1224", "iota"], status=4)


class Stats(unittest.TestCase, CommandlineHelper):

    def test_stats(self):
        self.assertEqual(self._records(["stats", "2143"]),
                         [{"word": "2143", "inv": 2, "sign": 1,
                           "exc_idx": [1, 3], "exc_val": [2, 4],
                           "rlm_idx": [2, 4], "rlm_val": [1, 3],
                           "fix": [], "cycle_type": [2, 2]}])

    def test_format_from_environment(self):
        text = self._run(["stats", "21"], environ={"DERANGE_LAB_FORMAT": "json"})
        self.assertEqual(json.loads(text)["sign"], -1)

    def test_bad_environment(self):
        self._run(["stats", "21"], environ={"DERANGE_LAB_JOBS": "0"}, status=2)


class Verify(unittest.TestCase, CommandlineHelper):

    def test_main_values(self):
        records = self._records(["verify", "main-values", "--n", "2..7"])
        self.assertEqual([r["n"] for r in records], [2, 3, 4, 5, 6, 7])
        self.assertTrue(all(r["equal"] for r in records))
        self.assertTrue(all(r["elapsed_ms"] is None for r in records))

    def test_timings(self):
        records = self._records(["verify", "exc-sn", "--n", "3", "--timings"])
        self.assertIsNotNone(records[0]["elapsed_ms"])

    def test_mr_count(self):
        self.assertEqual(self._records(["verify", "mr-count", "--n", "4",
                                        "--k", "2"]),
                         [{"identity": "mr-count", "n": 4, "k": 2,
                           "value": -1, "expected": -1, "equal": True}])

    def test_exc_fixed(self):
        records = self._records(["verify", "exc-fixed", "--n", "5",
                                 "--t", "2,5"])
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]["T"], [2, 5])
        self.assertTrue(records[0]["equal"])
        records = self._records(["verify", "exc-fixed", "--n", "3"])
        self.assertEqual(len(records), 8)

    def test_rlm_sn_counts(self):
        records = self._records(["verify", "rlm-sn", "--n", "3"])
        self.assertEqual(records[1], {"identity": "rlm-sn-counts", "n": 3,
                                      "counts": [0, -1, 1],
                                      "expected": [0, -1, 1],
                                      "equal": True})

    def test_bider_default_range(self):
        records = self._records(["verify", "bider"])
        self.assertEqual([r["n"] for r in records], [1, 2, 3, 4])

    def test_rlm_table_probe(self):
        record, = self._records(["verify", "rlm-table", "--n", "5"])
        self.assertEqual(record["row"], [11, 21, 11, 1])
        self.assertEqual(record["first_column"],
                         {"value": 11, "predicted": 11, "holds": True})
        self.assertFalse(record["diagonal"]["holds"])
        self.assertEqual(record["diagonal_shifted"],
                         {"formula": 11, "value": 11, "holds": True})

    def test_conjecture(self):
        records = self._records(["verify", "conjecture", "--n", "4"])
        self.assertEqual([r["k"] for r in records], [1, 2, 3, 4])
        self.assertTrue(all("equal" not in r for r in records))

    def test_parallel(self):
        records = self._records(["verify", "chapman", "--n", "1..6",
                                 "--jobs", "2"])
        self.assertEqual([r["n"] for r in records], [1, 2, 3, 4, 5, 6])

    def test_budget(self):
        self._run(["verify", "main-values", "--n", "9"], status=3)
        self._run(["verify", "bider", "--n", "6"], status=3)
        self._run(["--max-n", "4", "verify", "exc-sn", "--n", "5"], status=3)

    def test_perm_budget_with_workers(self):
        environ = {"DERANGE_LAB_PERM__MAX_N": "5"}
        self._run(["verify", "exc-sn", "--n", "5..6"], environ, status=3)
        self._run(["verify", "exc-sn", "--n", "5..6", "--jobs", "2"],
                  environ, status=3)
        self._run(["verify", "bider", "--n", "1..5", "--jobs", "2"],
                  {"DERANGE_LAB_PERM__MAX_N": "4"}, status=3)

    def test_bad_range(self):
        self._run(["verify", "main-values", "--n", "5..3"], status=2)

    def test_unknown_identity(self):
        with self.assertRaises(SystemExit) as cm:
            main(["verify", "nonsense"], environ={}, stdout=io.StringIO())
        self.assertEqual(cm.exception.code, 2)


class Tables(unittest.TestCase, CommandlineHelper):

    def test_rlm_der_csv(self):
        self.assertEqual(self._run(["--format", "csv", "--max-n", "5",
                                    "table", "rlm-der"]),
                         "n,k1,k2,k3,k4\n2,1\n3,1,1\n4,3,5,1\n5,11,21,11,1\n")

    def test_bider_counts(self):
        self.assertEqual(self._run(["table", "bider-counts"]),
                         "n count\n1 0\n2 1\n3 10\n4 297\n")

    def test_decisive_json(self):
        records = self._records(["table", "decisive-counts", "--max-n", "2"])
        self.assertEqual(records, [{"n": 1, "k": 1, "count": 1, "sign": 1},
                                   {"n": 2, "k": 1, "count": 1, "sign": -1},
                                   {"n": 2, "k": 2, "count": 1, "sign": 1}])


class Enumerate(unittest.TestCase, CommandlineHelper):

    def test_derangements(self):
        self.assertEqual(self._run(["enumerate", "der", "3"]),
                         "word=231\nword=312\n")

    def test_budget(self):
        self._run(["enumerate", "sn", "11"], status=3)


class Parsing(unittest.TestCase):

    def test_range(self):
        self.assertEqual(parse_range("2..4"), range(2, 5))
        self.assertEqual(parse_range("3"), range(3, 4))
        for bad in ("0..2", "a..b", "4..2"):
            with self.assertRaises(UsageError):
                parse_range(bad)

    def test_set(self):
        self.assertEqual(parse_set("{2,5}"), frozenset([2, 5]))
        self.assertEqual(parse_set(""), frozenset())
        with self.assertRaises(UsageError):
            parse_set("2;5")
