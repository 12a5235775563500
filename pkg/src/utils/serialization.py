"""
Serialization
Text formats for deformation data

C_n data, one entry per line:
    # comment
    n = 3
    m = 4            (optional ambient dimension)
    1 2: x2^-1 + 5
Plane curve data, one line "f; psi; phi" in the variables (u, v), with
psi and phi Laurent in u.
"""

import logging
import re
from typing import Dict, Optional, Tuple

from ..core.axes import CnDeformation, axis_variable
from ..core.errors import MalformedInputError
from ..core.fields import QQ, FieldSpec
from ..core.laurent import LaurentPoly
from ..core.plane_curves import CurveSectionRep, PlaneCurveDeformation
from ..core.poly import PolyRing
from .expression_parser import ParseContext, parse_poly

# Set up logging
logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^\s*([nm])\s*=\s*(\d+)\s*$")
_ENTRY = re.compile(r"^\s*(\d+)\s+(\d+)\s*:(.*)$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_cn_deformation(text: str, field: FieldSpec = QQ, n: Optional[int] = None) -> CnDeformation:
    """Read C_n data

    n comes from the header, else from the argument, else the largest axis
    index; m defaults to max(n, largest row index).
    """
    header: Dict[str, int] = {}
    entries: Dict[Tuple[int, int], LaurentPoly] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        match = _HEADER.match(line)
        if match:
            header[match.group(1)] = int(match.group(2))
            continue
        match = _ENTRY.match(line)
        if not match:
            raise MalformedInputError(f"line {number}: expected 'i j: expression', got {raw.strip()!r}")
        i, j = int(match.group(1)), int(match.group(2))
        if (i, j) in entries:
            raise MalformedInputError(f"line {number}: entry ({i}, {j}) given twice")
        var = axis_variable(j)
        ctx = ParseContext(PolyRing(field, (var,)), var)
        value = parse_poly(match.group(3).strip(), ctx)
        entries[(i, j)] = value
    if n is not None and header.get("n", n) != n:
        raise MalformedInputError(f"data is for C_{header['n']}, expected C_{n}")
    n = header.get("n") or n or max((j for _, j in entries), default=0)
    m = header.get("m") or max([n] + [i for i, _ in entries])
    logger.debug(f"read C_{n} data in A^{m} with {len(entries)} entries")
    return CnDeformation(n, entries, m, field)


def format_cn_deformation(d: CnDeformation) -> str:
    lines = [f"n = {d.n}"]
    if d.m != d.n:
        lines.append(f"m = {d.m}")
    for (i, j) in sorted(d.phi):
        lines.append(f"{i} {j}: {d.phi[(i, j)]}")
    return "\n".join(lines) + "\n"


def section_to_laurent(s: CurveSectionRep) -> LaurentPoly:
    """sum_i v^i g_i(u) as a Laurent polynomial in u with coefficients in v"""
    ring = PolyRing(s.f.ring.field, (s.v,))
    v = ring.var(s.v)
    total = LaurentPoly.zero(ring, s.u)
    for i, g in enumerate(s.coeffs):
        for k, c in g.terms.items():
            total = total + LaurentPoly(ring, s.u, {k: c.embed(ring) * v ** i})
    return total


def parse_plane_deformation(
    text: str,
    field: FieldSpec = QQ,
    variables: Tuple[str, str] = ("u", "v"),
) -> PlaneCurveDeformation:
    parts = [p.strip() for p in _strip_comment(text.strip()).split(";")]
    if len(parts) != 3:
        raise MalformedInputError("plane deformation needs 'f; psi; phi'")
    ring = PolyRing(field, tuple(variables))
    f = parse_poly(parts[0], ParseContext(ring))
    laurent = ParseContext(ring, variables[0])
    psi = parse_poly(parts[1], laurent)
    phi = parse_poly(parts[2], laurent)
    return PlaneCurveDeformation.from_values(f, psi, phi)


def format_plane_deformation(d: PlaneCurveDeformation) -> str:
    return f"{d.f}; {section_to_laurent(d.psi)}; {section_to_laurent(d.phi)}"


def read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def load_cn_deformation(path: str, field: FieldSpec = QQ, n: Optional[int] = None) -> CnDeformation:
    return parse_cn_deformation(read_text(path), field, n)


def load_plane_deformation(path: str, field: FieldSpec = QQ, variables: Optional[Tuple[str, str]] = None) -> PlaneCurveDeformation:
    return parse_plane_deformation(read_text(path), field, variables or ("u", "v"))
