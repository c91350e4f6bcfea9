"""
The two worked examples used throughout the tests and demos.

``E5`` is the five-element solution given by the permutations
``sigma_1 = sigma_3 = tau_1 = tau_3 = (1 2 3 4)``,
``sigma_2 = sigma_4 = tau_2 = tau_4 = (1 4 3 2)`` and
``sigma_5 = tau_5 = id``.  ``E4`` is the indecomposable four-element
solution with relations ``x1^2 = x2^2``, ``x1x2 = x3x4``, ``x1x3 = x4x2``,
``x3^2 = x4^2``, ``x2x4 = x3x1``, ``x2x1 = x4x3``.
"""

import json
from importlib import resources

from .documents import load_solution


def fixture_document(name: str) -> dict:
    text = resources.files("ybx").joinpath("data").joinpath(f"{name.lower()}.json").read_text()
    return json.loads(text)


def E5():
    return load_solution(fixture_document("e5"))


def E4():
    return load_solution(fixture_document("e4"))
