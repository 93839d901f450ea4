import json
import math
from dataclasses import dataclass, field

import click

from nil_rym.models.certificate import Certificate
from nil_rym.models.helpers import format_matrix, format_scalar, format_spectrum
from nil_rym.soliton import soliton_kind


@dataclass
class Report:
    """
    Result of one CLI command, rendered either as text or as sorted JSON.

    Attributes:
    - command: str - Command name.
    - subject: dict - Input summary (label, type, norm, ...).
    - certificates: list[Certificate] - Certificates in evaluation order.
    - sections: dict - Further named blocks of plain data (fingerprint, validation, flow runs, ...).
    """

    command: str
    subject: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)
    sections: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "subject": self.subject,
            "certificates": [c.as_dict() for c in self.certificates],
            **self.sections,
        }

    def to_json(self) -> str:
        return json.dumps(_finite(self.as_dict()), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def render_text(self, color: bool = False, timestamp: str = None) -> str:
        """
        Human-readable rendering. Every verdict line carries its residual and tolerance.

        Parameters:
            - color (bool): Colour verdicts with ANSI codes.
            - timestamp (str): Optional line added under the title.

        Returns:
            str: The report text, ending in a newline.
        """
        lines = [f"nil-rym {self.command}"]
        if timestamp:
            lines.append(f"  generated {timestamp}")
        for key, value in self.subject.items():
            lines.append(f"  {key}: {_text(value)}")
        for certificate in self.certificates:
            lines.extend(render_certificate(certificate, color))
        for name, block in self.sections.items():
            lines.append(f"[{name}]")
            lines.extend(_render_block(block, "  "))
        return "\n".join(lines) + "\n"


def _finite(value):
    # JSON has no NaN or Infinity.
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


def _text(value) -> str:
    if isinstance(value, float):
        return format_scalar(value)
    if isinstance(value, (list, tuple)) and value and all(isinstance(v, float) for v in value):
        return format_spectrum(value, 10)
    return str(value)


def _render_block(block, indent: str) -> list:
    if isinstance(block, dict):
        lines = []
        for key, value in block.items():
            if isinstance(value, dict):
                lines.append(f"{indent}{key}:")
                lines.extend(_render_block(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_text(value)}")
        return lines
    if isinstance(block, list):
        lines = []
        for i, item in enumerate(block):
            lines.append(f"{indent}- [{i}]")
            lines.extend(_render_block(item, indent + "  "))
        return lines
    return [f"{indent}{_text(block)}"]


def render_certificate(certificate: Certificate, color: bool = False) -> list:
    verdict = "TRUE" if certificate.verdict else "FALSE"
    if color:
        verdict = click.style(verdict, fg="green" if certificate.verdict else "red", bold=True)
    lines = [
        f"[{certificate.mode.value}] verdict {verdict}  residual {format_scalar(certificate.residual, 3)}"
        f"  tol {format_scalar(certificate.tol, 3)}",
        f"  r = {format_scalar(certificate.r)}",
    ]
    if certificate.s is not None:
        lines.append(f"  s = {format_scalar(certificate.s)}")
    if certificate.lam is not None:
        lines.append(f"  lambda = {format_scalar(certificate.lam)} ({soliton_kind(certificate.lam)})")
    if certificate.D is not None:
        lines.append("  D =")
        lines.append(format_matrix(certificate.D, indent="    "))
    for name, residual in sorted(certificate.residuals.items()):
        lines.append(f"  residual[{name}] = {format_scalar(residual, 3)}")
    return lines
