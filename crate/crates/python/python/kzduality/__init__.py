"""Exact Macdonald/ASEP polynomials and multi-species ASEP duality.

Thin wrapper over the compiled ``_kzduality`` module: results come back as
decoded JSON (see the repository README for the schema).
"""

import json

from . import _kzduality

__all__ = ["e_mu", "f_mu", "reduce", "psi_table", "h_eval", "staircase", "criterion"]


def e_mu(mu):
    return json.loads(_kzduality.e_mu(list(mu)))


def f_mu(mu, method="recursion"):
    return json.loads(_kzduality.f_mu(list(mu), method))


def reduce(mu, m, p=1):
    return json.loads(_kzduality.reduce(list(mu), m, p))


def psi_table(delta, m, p=1):
    return json.loads(_kzduality.psi_table(list(delta), m, p))


def h_eval(nu, mu):
    return _kzduality.h_eval(list(nu), list(mu))


def staircase(mu, m):
    return _kzduality.staircase(list(mu), m)


def criterion(cid):
    return json.loads(_kzduality.criterion(cid))
