"""
Command Reports
Pydantic models shared by the command line and the HTTP service
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field  # type: ignore

from ..config import get_error_message

STATUS_OK = "ok"
STATUS_NO = "no"
STATUS_ERROR = "error"


class CommandReport(BaseModel):
    """Outcome of one command: text lines for people, data for scripts"""

    command: str
    status: str = STATUS_OK
    exit_code: int = 0
    lines: List[str] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)

    def add(self, line: str) -> "CommandReport":
        self.lines.append(line)
        return self

    def text(self) -> str:
        return "\n".join(self.lines)


class RunRequest(BaseModel):
    command: str
    args: List[str] = Field(default_factory=list)


def answer_report(command: str, answer: bool, lines: List[str], data: Optional[Dict[str, Any]] = None) -> CommandReport:
    """Report of a yes/no command: exit 0 on yes, 1 on no"""
    return CommandReport(
        command=command,
        status=STATUS_OK if answer else STATUS_NO,
        exit_code=0 if answer else 1,
        lines=lines,
        data=data or {},
    )


def error_report(command: str, error_type: str, details: str) -> CommandReport:
    message = get_error_message(error_type, details)
    return CommandReport(
        command=command,
        status=STATUS_ERROR,
        exit_code=2,
        lines=[f"error: {line}" for line in message.splitlines()],
        data={"error_type": error_type, "details": details},
    )
