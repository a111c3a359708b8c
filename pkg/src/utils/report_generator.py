"""
Report Generation for Spectral Decisions

Builds the versioned JSON envelope every command emits and the pandas
tables used for human-readable and CSV output.

Classes:
    ReportGenerator: Envelopes, tables and schema loading
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from config.settings import APPLICATION_CONFIG, OUTPUT_CONFIG
from src.utils.data_models import HornTriple, Partition, SampleReport, StabilityReport, Verdict

logger = logging.getLogger(__name__)


class ReportGenerator:
    """Formats library results for the command-line surface."""

    def __init__(self, version: str = None, schema_version: int = None):
        self.version = version or APPLICATION_CONFIG["app_version"]
        self.schema_version = schema_version or OUTPUT_CONFIG["schema_version"]

    def build_envelope(self, command: str, inputs: Dict[str, Any], result: Dict[str, Any]) -> Dict[str, Any]:
        """
        Wrap a result in the response envelope.

        Args:
            command: Subcommand path, e.g. "check hermitian"
            inputs: Parsed inputs echoed back
            result: Command-specific payload

        Returns:
            Dictionary matching the response schema
        """
        return {
            "command": command,
            "inputs": inputs,
            "result": result,
            "version": self.version,
            "schema_version": self.schema_version,
        }

    @staticmethod
    def render_json(payload: Dict[str, Any]) -> str:
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)

    @staticmethod
    def horn_table(triples: Sequence[HornTriple]) -> pd.DataFrame:
        rows = [{"p": t.p, "I": str(t.I), "J": str(t.J), "K": str(t.K), "d": t.degree,
                 "c": "" if t.c is None else t.c} for t in triples]
        return pd.DataFrame(rows, columns=["p", "I", "J", "K", "d", "c"])

    @staticmethod
    def decomposition_table(decomposition: Sequence[Tuple[Partition, int]]) -> pd.DataFrame:
        rows = [{"gamma": str(shape), "multiplicity": c} for shape, c in decomposition]
        return pd.DataFrame(rows, columns=["gamma", "multiplicity"])

    @staticmethod
    def verdict_table(verdict: Verdict) -> pd.DataFrame:
        rows: List[Tuple[str, Any]] = [
            ("feasible", verdict.feasible),
            ("slack", f"{verdict.slack:.6g}"),
            ("witness_kind", verdict.witness_kind.value),
        ]
        if verdict.inequality:
            rows.append(("inequality", verdict.inequality))
        for note in verdict.notes:
            rows.append(("note", note))
        return pd.DataFrame(rows, columns=["field", "value"])

    @staticmethod
    def stability_table(report: StabilityReport) -> pd.DataFrame:
        rows = [("status", report.status.value), ("slack", f"{report.slack:.6g}")]
        if report.inequality:
            rows.append(("tightest", report.inequality))
        return pd.DataFrame(rows, columns=["field", "value"])

    @staticmethod
    def sample_table(report: SampleReport) -> pd.DataFrame:
        rows = [("kind", report.kind), ("trials", report.trials), ("seed", report.seed),
                ("all_pass", report.all_pass), ("worst_slack", f"{report.worst_slack:.6g}"),
                ("failure_count", report.failure_count)]
        rows.extend((key, value) for key, value in sorted(report.extras.items()))
        return pd.DataFrame(rows, columns=["field", "value"])

    @staticmethod
    def render_table(frame: pd.DataFrame) -> str:
        if frame.empty:
            return "(no rows)"
        return frame.to_string(index=False)

    def export_csv(self, frame: pd.DataFrame, path: Optional[str] = None) -> str:
        """
        Export a table as CSV.

        Args:
            frame: Table to export
            path: Target file; when omitted the CSV text is only returned

        Returns:
            CSV content
        """
        content = frame.to_csv(index=False)
        if path is not None:
            Path(path).write_text(content, encoding="utf-8")
            logger.info(f"CSV table written to {path}")
        return content

    @staticmethod
    def load_schema(name: str) -> Dict[str, Any]:
        """Load a schema shipped under the schema directory by file name."""
        path = Path(OUTPUT_CONFIG["schema_directory"]) / name
        return json.loads(path.read_text(encoding="utf-8"))


# Global instance shared by the command handlers
report_generator = ReportGenerator()

