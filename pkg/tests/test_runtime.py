from __future__ import annotations

import json
import logging
import tempfile
import unittest
from pathlib import Path

from genocchi.errors import ParameterError, SingularParameterError
from runtime.common import EventMeta
from runtime.config import load_platform_config, merge_config
from runtime.engine import run_task
from runtime.logger import LIBRARY_LOGGER, close_run_logger, open_run_logger, run_log_path
from runtime.registry import discover_tasks, resolve_task, validate_task

ROOT_DIR = Path(__file__).resolve().parents[1]


def _read_jsonl(path: Path) -> list[dict]:
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]


class _TempRuns(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        self.env = {
            "GENOCCHI_OUTPUTS_DIR": str(self.tmp / "outputs"),
            "GENOCCHI_LOGS_DIR": str(self.tmp / "logs"),
        }

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def run_task(self, task: str, **overrides) -> dict:
        return run_task(
            task,
            root_dir=ROOT_DIR,
            agent_id="agent_test",
            run_id=f"{task}_demo",
            config_overrides=overrides,
            invocation={"test": True},
            environ=self.env,
            console=False,
        )

    def agent_dir(self, task: str) -> Path:
        return self.tmp / "outputs" / task / f"{task}_demo" / "agents" / "agent_test"


class TestEngineRunLayout(_TempRuns):
    def test_table_run(self) -> None:
        res = self.run_task("table", family="genocchi", max_n=4)
        self.assertEqual(res["status"], "ok")
        self.assertEqual(res["rows"], 5)
        self.assertEqual(res["run_id"], "table_demo")

        agent = self.agent_dir("table")
        table = json.loads(Path(res["artifact"]).read_text(encoding="utf-8"))
        self.assertEqual(table["rows"][4], {"n": 4, "coeffs": ["1", "0", "-6", "4"]})
        self.assertEqual(json.loads((agent / "result.json").read_text(encoding="utf-8"))["status"], "ok")

        request = json.loads((agent / "work" / "request.json").read_text(encoding="utf-8"))
        self.assertEqual(request["config_overrides"], {"family": "genocchi", "max_n": 4})
        self.assertEqual(request["config"]["format"], "json")
        self.assertEqual(request["invocation"], {"test": True})

        events = [e["event"] for e in _read_jsonl(agent / "events.jsonl")]
        self.assertEqual(events, ["task.start", "table.written", "task.end"])
        kinds = {r.get("kind") for r in _read_jsonl(agent / "index.jsonl")}
        self.assertEqual(kinds, {"request", "table"})

        self.assertTrue((agent / "agent.json").exists())
        # only the coordinator writes the shared run meta
        self.assertFalse(json.loads((agent / "agent.json").read_text(encoding="utf-8"))["coordinator"])
        self.assertFalse((agent.parents[1] / "shared" / "run.json").exists())
        log = self.tmp / "logs" / "table" / "table_demo" / "agent_test.log"
        self.assertIn("tabulating genocchi", log.read_text(encoding="utf-8"))

    def test_coordinator_writes_run_meta(self) -> None:
        self.env["GENOCCHI_COORDINATOR"] = "1"
        self.run_task("eval", family="genocchi", n=1)
        shared = self.tmp / "outputs" / "eval" / "eval_demo" / "shared"
        run_meta = json.loads((shared / "run.json").read_text(encoding="utf-8"))
        self.assertEqual((run_meta["task"], run_meta["run_id"]), ("eval", "eval_demo"))
        agent_meta = json.loads((self.agent_dir("eval") / "agent.json").read_text(encoding="utf-8"))
        self.assertTrue(agent_meta["coordinator"])

    def test_table_export(self) -> None:
        target = self.tmp / "exports" / "g.csv"
        res = self.run_task("table", family="euler", max_n=2, format="csv", output=str(target))
        self.assertEqual(res["output"], str(target))
        self.assertEqual(target.read_text(encoding="utf-8"), "n,x^0,x^1,x^2\n0,1\n1,-1/2,1\n2,0,-1,1\n")
        scopes = {r["scope"] for r in _read_jsonl(self.agent_dir("table") / "index.jsonl")}
        self.assertIn("export", scopes)

    def test_eval_run(self) -> None:
        res = self.run_task("eval", family="genocchi", n=3, x="1/2")
        self.assertEqual(res["value"], "-3/4")
        value = json.loads((self.agent_dir("eval") / "value.json").read_text(encoding="utf-8"))
        self.assertEqual(value["value"], "-3/4")
        self.assertEqual(value["x"], "1/2")

    def test_verify_run(self) -> None:
        res = self.run_task("verify", only="COMPLEMENT", max_n=2, lambdas=["1/2"])
        self.assertEqual(res["status"], "ok")
        self.assertEqual(res["summary"]["fail"], 0)
        self.assertEqual(res["unexpected_failures"], [])
        report = json.loads(Path(res["report"]).read_text(encoding="utf-8"))
        self.assertEqual(report["config"]["only"], ["COMPLEMENT"])
        results = [e for e in _read_jsonl(self.agent_dir("verify") / "events.jsonl") if e["event"] == "identity.result"]
        self.assertEqual(len(results), 3)
        self.assertEqual({e["data"]["id"] for e in results}, {"COMPLEMENT"})

    def test_error_result(self) -> None:
        with self.assertRaises(SingularParameterError):
            self.run_task("eval", family="apostol-genocchi", n=2, **{"lambda": "-1"})
        err = json.loads((self.agent_dir("eval") / "result.json").read_text(encoding="utf-8"))
        self.assertEqual(err["status"], "error")
        self.assertEqual(err["error_type"], "SingularParameterError")
        events = _read_jsonl(self.agent_dir("eval") / "events.jsonl")
        self.assertEqual(events[-1]["event"], "task.error")
        self.assertEqual(events[-1]["level"], "ERROR")

    def test_unknown_task(self) -> None:
        with self.assertRaises(FileNotFoundError):
            self.run_task("nope")


class TestRegistryAndConfig(unittest.TestCase):
    def test_discovery_and_validation(self) -> None:
        names = {t.name for t in discover_tasks(ROOT_DIR, environ={})}
        self.assertEqual(names, {"table", "eval", "verify"})
        self.assertEqual(resolve_task("verify", ROOT_DIR, environ={}).outputs, ("report.json",))
        for name in names:
            validate_task(name, ROOT_DIR, environ={})
        with self.assertRaises(FileNotFoundError):
            validate_task("weather", ROOT_DIR, environ={})

    def test_merge_config(self) -> None:
        merged = merge_config({"max_n": 12, "format": "json"}, {"max_n": 3, "format": None})
        self.assertEqual(merged, {"max_n": 3, "format": "json"})
        self.assertEqual(merge_config({"a": 1}, None), {"a": 1})

    def test_platform_config(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            env = {
                "GENOCCHI_OUTPUTS_DIR": str(Path(tmp) / "o"),
                "GENOCCHI_LOGS_DIR": str(Path(tmp) / "l"),
                "GENOCCHI_LOG_LEVEL": "debug",
                "GENOCCHI_PRECISION": "40",
            }
            cfg = load_platform_config(root_dir=ROOT_DIR, environ=env)
            self.assertEqual(cfg.log_level, "DEBUG")
            self.assertEqual(cfg.default_precision, 40)
            self.assertTrue(cfg.outputs_dir.is_dir())
            for bad in ("many", "0"):
                with self.subTest(bad=bad):
                    with self.assertRaises(ParameterError):
                        load_platform_config(root_dir=ROOT_DIR, environ={**env, "GENOCCHI_PRECISION": bad})


class TestRunLogger(unittest.TestCase):
    def test_run_context_and_library_routing(self) -> None:
        meta = EventMeta(task="table", run_id="r7", agent_id="agent3")
        with tempfile.TemporaryDirectory() as tmp:
            logs_dir = Path(tmp)
            for attempt in range(2):
                logger = open_run_logger(meta, logs_dir=logs_dir, console=False)
                logger.info("row %d written", attempt)
                logging.getLogger("genocchi.families").info("library record %d", attempt)
                close_run_logger(logger)
            self.assertEqual(logging.getLogger(LIBRARY_LOGGER).handlers, [])
            lines = run_log_path(logs_dir, meta).read_text(encoding="utf-8").splitlines()
        self.assertEqual(run_log_path(logs_dir, meta).name, "agent3.log")
        self.assertEqual(len(lines), 4)
        self.assertTrue(all("[table/r7/agent3]" in line for line in lines))
        self.assertIn("[task.table.r7.agent3] row 1 written", lines[2])
        self.assertIn("[genocchi.families] library record 1", lines[3])


if __name__ == "__main__":
    unittest.main()
