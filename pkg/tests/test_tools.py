from __future__ import annotations

import io
import json
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path

from runtime.engine import run_task
from tools import list_runs, query_artifacts, query_events

ROOT_DIR = Path(__file__).resolve().parents[1]


class TestRunTools(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls._tmp = tempfile.TemporaryDirectory()
        cls.root = Path(cls._tmp.name)
        env = {
            "GENOCCHI_OUTPUTS_DIR": str(cls.root / "outputs"),
            "GENOCCHI_LOGS_DIR": str(cls.root / "logs"),
        }
        run_task(
            "verify",
            root_dir=ROOT_DIR,
            run_id="r1",
            config_overrides={"only": "C2_12", "max_n": 1, "odd_m": [1, 3]},
            environ=env,
            console=False,
        )
        run_task(
            "eval",
            root_dir=ROOT_DIR,
            run_id="r2",
            config_overrides={"family": "euler", "n": 2},
            environ=env,
            console=False,
        )

    @classmethod
    def tearDownClass(cls) -> None:
        cls._tmp.cleanup()

    def _main(self, tool, *argv: str) -> tuple[int, list[str]]:
        out = io.StringIO()
        with redirect_stdout(out):
            code = tool.main(["--root", str(self.root), *argv])
        return code, out.getvalue().splitlines()

    def test_collect_runs(self) -> None:
        rows = list_runs.collect_runs(self.root / "outputs")
        self.assertEqual(rows, [("eval", "r2", "agent0", "ok"), ("verify", "r1", "agent0", "ok")])
        self.assertEqual(list_runs.collect_runs(self.root / "outputs", "table"), [])

    def test_list_runs_cli(self) -> None:
        code, lines = self._main(list_runs, "--task", "verify")
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 2)
        self.assertIn("r1", lines[1])
        self.assertEqual(self._main(list_runs, "--status", "error")[1], ["(no runs found)"])

    def test_query_events(self) -> None:
        code, lines = self._main(query_events, "--event", "identity.result", "--id", "C2_12")
        self.assertEqual(code, 0)
        records = [json.loads(line) for line in lines]
        # rows n = 0..1 for m in (1, 3)
        self.assertEqual(len(records), 4)
        self.assertTrue(all(r["data"]["status"] == "pass" for r in records))
        self.assertEqual(self._main(query_events, "--status", "fail")[1], [])
        self.assertEqual(len(self._main(query_events, "--task", "eval", "--limit", "1")[1]), 1)

    def test_query_artifacts(self) -> None:
        code, lines = self._main(query_artifacts, "--kind", "report")
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 1)
        self.assertTrue(json.loads(lines[0])["path"].endswith("report.json"))
        kinds = {json.loads(line)["kind"] for line in self._main(query_artifacts, "--task", "eval")[1]}
        self.assertEqual(kinds, {"request", "value"})

    def test_missing_outputs(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            out = io.StringIO()
            with redirect_stdout(out):
                self.assertEqual(list_runs.main(["--root", tmp]), 2)


if __name__ == "__main__":
    unittest.main()
