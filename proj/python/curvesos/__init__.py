"""Python front end for the curvesos command pipeline.

Every function returns a :class:`Result` holding the exit code and the decoded JSON report,
mirroring the command-line tool (0 yes/verified, 1 bad input, 2 unknown, 3 no/refuted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import _curvesos

__all__ = [
    "Result",
    "analyze",
    "canonical_poly",
    "certify",
    "decide",
    "fibres",
    "gram",
    "run",
    "saturation",
    "smp",
    "verify",
    "witness",
]

canonical_poly = _curvesos.canonical_poly


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: Optional[Any]
    error: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def run(
    command: str,
    payload: dict,
    *,
    subcommand: str = "",
    tol: float = 1e-9,
    degree_cap: int = -1,
    seed: int = 0,
    metadata: Optional[dict] = None,
) -> Result:
    """Run a command on an input document, as ``curvesos <command> file.json`` would."""
    code, out, err = _curvesos.run(
        command,
        json.dumps(payload),
        subcommand,
        tol,
        degree_cap,
        seed,
        None if metadata is None else json.dumps(metadata),
    )
    report = json.loads(out) if out.strip() else None
    error = json.loads(err.splitlines()[-1]) if err.strip() else None
    return Result(code, report, error)


def _curve(factors: Sequence[str]) -> dict:
    return {"factors": list(factors)}


def analyze(factors: Sequence[str], **options) -> Result:
    return run("analyze", _curve(factors), **options)


def decide(factors: Sequence[str], **options) -> Result:
    return run("decide", _curve(factors), **options)


def witness(factors: Sequence[str], **options) -> Result:
    return run("witness", _curve(factors), **options)


def certify(factors: Sequence[str], target: str, **options) -> Result:
    return run("certify", {"curve": _curve(factors), "target": target}, **options)


def verify(document: dict, **options) -> Result:
    """Check a certificate or witness document produced by :func:`certify` or :func:`witness`."""
    return run("verify", document, **options)


def saturation(generators: Sequence[str], factors: Optional[Sequence[str]] = None, **options) -> Result:
    """Line generators in ``t`` when ``factors`` is omitted, plane generators otherwise."""
    payload: dict = {"generators": list(generators)}
    if factors is not None:
        payload["curve"] = _curve(factors)
    return run("preorder", payload, subcommand="saturation", **options)


def smp(factors: Sequence[str], generators: Sequence[str], **options) -> Result:
    return run("smp", {"curve": _curve(factors), "generators": list(generators)}, **options)


def gram(factors: Sequence[str], target: str, degree: int = 1, **options) -> Result:
    return run("gram", {"curve": _curve(factors), "target": target, "degree": degree}, **options)


def fibres(phi: str, generators: Sequence[str], samples: Sequence[str], **options) -> Result:
    """Moment property of each fibre {phi = c} for the sample values c (rational strings)."""
    payload = {"phi": phi, "generators": list(generators), "samples": list(samples)}
    return run("smp", payload, **options)
