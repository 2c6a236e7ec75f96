"""Exact workbench for finite complex reflection groups."""

import json

from ._core import Group as _Group
from ._core import NotFiniteError, SpecError, kappa_formula
from . import _core

__all__ = ["Group", "SpecError", "NotFiniteError", "kappa_formula", "kappa_table", "poincare", "render_text"]


def _dump(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


class Group(_Group):
    """A catalog group built from a spec dict, e.g. {"kind": "exceptional", "st": 4}."""

    def __init__(self, spec, order_bound=10000):
        super().__init__(_dump(spec), order_bound)

    def analyze(self, monodromy=False, seed=1):
        return json.loads(self.analyze_json(monodromy, seed))

    def verify(self, suite="all", seed=1):
        return json.loads(self.verify_json(suite, seed))


def kappa_table(family="", order_bound=10000):
    return json.loads(_core.kappa_table_json(family, order_bound))


def poincare(arrangement):
    return json.loads(_core.poincare_json(_dump(arrangement)))


def render_text(report):
    return _core.render_text(_dump(report))
