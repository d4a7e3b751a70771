"""Exact decisions of graded symmetry and Frobenius properties for group-graded algebras."""

import json

from . import _core
from ._core import (
    Algebra,
    GradsymError,
    center_algebra,
    constructor_names,
    direct_product,
    scalar_extension,
    suite_instance_names,
    suite_names,
    tensor_product,
    trivial_extension,
    ungrade,
)

HUNT_REGRESSION_INSTANCES = _core.HUNT_REGRESSION_INSTANCES

MODES = ("graded-symmetric", "graded-frobenius", "symmetric", "frobenius")


def algebra(spec):
    """Build an algebra from a spec dict (constructor or raw block) or its JSON text."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return _core.parse_algebra(spec)


def to_dict(a):
    return json.loads(a.to_json())


def decide(a, mode="graded-symmetric"):
    """Verdict dict with status, witness or refutation, gram rank and algebra hash."""
    return json.loads(_core.decide(a, mode))


def check_certificate(a, certificate):
    return json.loads(_core.check_certificate(a, json.dumps(certificate)))


def invariants(a):
    return json.loads(_core.invariants(a))


def run_suite(only="", corrupt=""):
    return json.loads(_core.run_suite(only, corrupt))


def hunt(p=2, ext_degrees=(1, 2), groups=None, alpha=(), budget=0, workers=1):
    """Run the crossed-product hunt; returns (report, checkpoint)."""
    if groups is None:
        groups = [
            {"kind": "cyclic", "params": [2]},
            {"kind": "product", "params": [2, 2]},
            {"kind": "cyclic", "params": [4]},
        ]
    ck = json.loads(
        _core.hunt(p, list(ext_degrees), [json.dumps(g) for g in groups], list(alpha), budget, workers)
    )
    return ck["body"]["report"], ck


def resume_hunt(checkpoint, budget=0, workers=1):
    return json.loads(_core.resume_hunt(json.dumps(checkpoint), budget, workers))
