import json
from typing import Literal

from src.schemas.report.models import Report


class ReportRenderer:
    """Renders reports as byte-deterministic text or JSON."""

    def __init__(self, output_format: Literal["json", "text"] = "text", json_indent: int = 2):
        self.output_format = output_format
        self.json_indent = json_indent

    def render(self, report: Report) -> str:
        if self.output_format == "json":
            return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=self.json_indent) + "\n"
        return self._render_text(report) + "\n"

    def _render_text(self, report: Report) -> str:
        diagnostics = report.diagnostics
        if diagnostics is None:
            return report.summary
        labels = f" ({', '.join(diagnostics.labels)})" if diagnostics.labels else ""
        return f"error: {diagnostics.error}{labels}: {diagnostics.message}"
