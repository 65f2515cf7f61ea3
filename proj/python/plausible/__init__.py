"""Python bindings for the plausible workbench.

Models, proofs and algebras are accepted either as JSON text or as the
equivalent dict; reports come back as dicts.
"""

import json as _json

from . import _core
from ._core import PlausibleError, alg_validates as _alg_validates, dialect, evaluate as _evaluate, render, translate

__all__ = [
    "PlausibleError",
    "alg_validates",
    "check_algebra",
    "check_proof",
    "dialect",
    "evaluate",
    "find_countermodel",
    "k_experiment",
    "render",
    "supplement",
    "translate",
    "translate_proof",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def evaluate(model, world, formula):
    return _evaluate(_text(model), world, formula)


def supplement(model):
    return _json.loads(_core.supplement(_text(model)))


def find_countermodel(formula, max_worlds, model_class="constrained", atoms=None, threads=1):
    return _json.loads(_core.find_countermodel(formula, max_worlds, model_class, atoms, threads))


def check_proof(proof, s5_re=False):
    return _json.loads(_core.check_proof(_text(proof), s5_re))


def translate_proof(proof):
    return _json.loads(_core.translate_proof(_text(proof)))


def check_algebra(algebra):
    return _json.loads(_core.check_algebra(_text(algebra)))


def alg_validates(algebra, formula):
    return _alg_validates(_text(algebra), formula)


def k_experiment(max_worlds=3, threads=1):
    return _json.loads(_core.k_experiment(max_worlds, threads))
