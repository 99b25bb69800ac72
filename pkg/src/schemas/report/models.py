from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class Diagnostics(BaseModel):
    """Error taxonomy entry for a failed command."""

    error: str = Field(..., description="Error class name")
    labels: List[str] = Field(default_factory=list, description="Offending atom labels")
    message: str = Field("", description="Human readable explanation")


class Report(BaseModel):
    """Deterministic result of one CLI command."""

    command: str = Field(..., description="Command name")
    arguments: List[str] = Field(default_factory=list, description="Inline arguments as given")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Input path -> content digest")
    result: Optional[Any] = Field(None, description="Result payload")
    summary: str = Field("", description="One-line text rendering of the result")
    diagnostics: Optional[Diagnostics] = Field(None, description="Present when the command failed")
    exit_code: int = Field(0, description="Process exit code")
