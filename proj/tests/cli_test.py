"""End-to-end checks of the balance command-line tool."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

BALANCE = sys.argv.pop(1) if len(sys.argv) > 1 else "balance"


def run(*args, stdin=None):
    return subprocess.run([BALANCE, *args], input=stdin, capture_output=True, text=True)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.four = os.path.join(cls.tmp.name, "four.txt")
        with open(cls.four, "w") as f:
            f.write("# 4 coins, 2 rounds\nLL\nLR\nRL\nRR\n")
        cls.bad = os.path.join(cls.tmp.name, "bad.txt")
        with open(cls.bad, "w") as f:
            f.write("LL\nLQ\n")

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def report(self, *args, stdin=None):
        p = run(*args, stdin=stdin)
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        self.assertEqual(doc["schema"], "1")
        self.assertIn("elapsed_ms", doc)
        return doc

    def test_construct(self):
        p = run("construct", "--kind", "binary", "--n", "4", "--q", "2")
        self.assertEqual(p.stdout, "LL\nLR\nRL\nRR\n")
        p = run("construct", "--kind", "random", "--n", "3", "--q", "4", "--r", "0.5", "--seed", "9")
        again = run("construct", "--kind", "random", "--n", "3", "--q", "4", "--r", "0.5", "--seed", "9")
        self.assertEqual(p.stdout, again.stdout)
        self.assertEqual(run("construct", "--kind", "ternary", "--n", "10", "--q", "2").returncode, 3)

    def test_adjudicate(self):
        doc = self.report("adjudicate", "--spec", "4,2,0,heavy", "--strategy", self.four, "--mask", "LR")
        self.assertEqual(doc["outcome"], "player-identifies")
        self.assertEqual(doc["survivors"], [{"coin": 2, "sign": "heavy"}])
        p = run("adjudicate", "--spec", "4,2,0,heavy", "--strategy", self.four, "--mask", "LRD")
        self.assertEqual(p.returncode, 6)
        p = run("adjudicate", "--spec", "4,2,0,heavy", "--strategy", self.bad, "--mask", "LR")
        self.assertEqual(p.returncode, 2)
        self.assertIn("line 2, column 2", p.stderr)

    def test_attack_and_certify(self):
        doc = self.report("certify", "--spec", "4,2,0,heavy", "--strategy", self.four)
        self.assertEqual(doc["outcome"], "player-must-win")
        self.assertEqual(doc["masks_checked"], 9)
        doc = self.report("attack", "--spec", "4,2,0,unknown", "--strategy", self.four)
        self.assertEqual(doc["outcome"], "balance-wins")
        doc = self.report("attack", "--spec", "4,2,0,heavy", "--strategy", self.four, "--constructive")
        self.assertIsNone(doc["attack"])
        self.assertEqual(run("attack", "--spec", "4,2,1,heavy", "--strategy", self.four, "--constructive").returncode, 5)
        self.assertEqual(run("certify", "--spec", "4,2,0,heavy", "--strategy", self.four, "--max-rounds", "1").returncode, 4)

    def test_value_and_census(self):
        doc = self.report("value", "--spec", "5,2,0,unknown", "--exhaustive")
        self.assertEqual(doc["winner"], "balance")
        doc = self.report("census", "--n", "4", "--q", "2", "--prior", "unknown")
        self.assertEqual(doc["perfect_matrices"], 384)
        self.assertEqual(doc["matches"], "codebook_times_order")
        self.assertEqual(run("census", "--n", "4", "--q", "2", "--census-cap", "10").returncode, 4)

    def test_sweep(self):
        p = run("sweep", "--qmax", "2", "--prior", "heavy", "--k", "0")
        rows = list(csv.DictReader(io.StringIO(p.stdout)))
        self.assertEqual([r["player_max_n"] for r in rows], ["3", "9"])
        self.assertEqual([r["balance_min_n"] for r in rows], ["4", "10"])

    def test_analyze(self):
        p = run("analyze", "--curve", "g", "--grid", "1000")
        rows = list(csv.reader(io.StringIO(p.stdout)))
        self.assertEqual(rows[0], ["r", "g"])
        best = max(rows[1:], key=lambda r: float(r[1]))
        self.assertAlmostEqual(float(best[0]), 0.667, delta=1e-3)
        self.assertAlmostEqual(float(best[1]), 3.0, delta=1e-5)
        p = run("analyze", "--curve", "v", "--r2", "0.2", "--grid", "50")
        self.assertEqual(p.stdout.splitlines()[0], "r,v")
        self.assertIn("warning", p.stderr)
        p = run("analyze", "--curve", "optimal-r", "--grid", "7")
        self.assertEqual(p.stdout.splitlines()[0], "r2,argmax,max")
        self.assertEqual(len(p.stdout.splitlines()), 8)
        self.assertEqual(run("analyze", "--curve", "zeta").returncode, 2)

    def test_simulations(self):
        a = self.report("simulate", "--spec", "4,2,0,heavy", "--r", "0", "--trials", "50", "--seed", "3")
        self.assertEqual(a["estimate"], 1.0)
        b = self.report("concentrate", "--q", "100", "--trials", "500")
        self.assertLessEqual(b["empirical_tail"], b["chernoff_bound"])
        c = self.report("perfect-rate", "--n", "1", "--q", "1", "--trials", "20")
        self.assertEqual(c["exact_rate"], 1.0)

    def test_play(self):
        doc = self.report("play", "--spec", "4,2,0,heavy", "--strategy", self.four, stdin="RR\n")
        self.assertEqual(doc["survivors"], [{"coin": 4, "sign": "heavy"}])
        doc = self.report("play", "--spec", "4,2,0,unknown", "--as-player", stdin="LL\nLR\nRL\nRR\n")
        self.assertEqual(doc["outcome"], "balance-wins")
        doc = self.report("play", "--spec", "4,2,0,heavy", "--as-player", stdin="LL\nLR\nRL\nRR\n")
        self.assertNotEqual(doc["outcome"], "balance-wins")

    def test_pretty_and_usage(self):
        p = run("--pretty", "certify", "--spec", "4,2,0,heavy", "--strategy", self.four)
        self.assertIn("outcome: player-must-win", p.stdout)
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("value", "--spec", "4,2").returncode, 2)
        self.assertEqual(run("value", "--spec", "0,2,0,heavy").returncode, 6)


if __name__ == "__main__":
    unittest.main()
