"""Python interface to the qloop C++ library.

Every function returns plain Python data decoded from the library's JSON
output. Polynomials have the form ``{"terms": [{"Y": [[i, s, e], ...], "c": c}]}``.
"""

import json as _json

from . import _qloop
from ._qloop import (
    CapExceeded,
    ConsistencyError,
    Error,
    InvalidInput,
    SingularityError,
    WindowTooSmall,
)

__all__ = [
    "CapExceeded",
    "ConsistencyError",
    "Error",
    "InvalidInput",
    "SingularityError",
    "WindowTooSmall",
    "cluster_classify",
    "cluster_enumerate",
    "cluster_factor",
    "cluster_fpoly",
    "positive_roots",
    "grassmannian_euler",
    "fundamental_qchar",
    "kr_qchar",
    "sl2_factor",
    "sl2_kr",
    "standard_qchar",
    "truncated_qchar",
    "verify_l1",
    "verify_tsystem",
    "verify_iota",
    "yang_baxter",
]


def _monomial_arg(monomial):
    return monomial if isinstance(monomial, str) else _json.dumps(monomial)


def sl2_kr(k, s):
    return _json.loads(_qloop.sl2_kr(k, s))


def sl2_factor(monomial):
    return _json.loads(_qloop.sl2_factor(_monomial_arg(monomial)))


def yang_baxter(u, v, q):
    """Exact check of the Yang-Baxter equation; u, v, q are rationals as strings like "3/4"."""
    return _json.loads(_qloop.sl2_ybe(str(u), str(v), str(q)))["pass"]


def positive_roots(type):
    return _json.loads(_qloop.rep_roots(type))["roots"]


def grassmannian_euler(type, beta, nu):
    return _json.loads(_qloop.rep_euler(type, list(beta), list(nu)))


def fundamental_qchar(type, node, shift):
    return _json.loads(_qloop.qchar_fundamental(type, node, shift))


def standard_qchar(type, w):
    """w: list of [node, shift, multiplicity]."""
    return _json.loads(_qloop.qchar_standard(type, _json.dumps(w)))


def kr_qchar(type, node, k, shift):
    return _json.loads(_qloop.qchar_kr(type, node, k, shift))


def truncated_qchar(type, beta=None, monomial=None):
    if (beta is None) == (monomial is None):
        raise ValueError("give exactly one of beta and monomial")
    if beta is not None:
        return _json.loads(_qloop.qchar_truncated_root(type, list(beta)))
    return _json.loads(_qloop.qchar_truncated_monomial(type, _monomial_arg(monomial)))


def cluster_enumerate(type, level, cap=100000):
    return _json.loads(_qloop.cluster_enumerate(type, level, cap))


def cluster_fpoly(type, beta, cap=100000):
    return _json.loads(_qloop.cluster_fpoly(type, list(beta), cap))


def cluster_classify(type, level, cap=100000):
    return _json.loads(_qloop.cluster_classify(type, level, cap))


def cluster_factor(type, monomial, cap=100000):
    return _json.loads(_qloop.cluster_factor(type, _monomial_arg(monomial), cap))


def verify_l1(type):
    return _json.loads(_qloop.verify_l1(type))


def verify_tsystem(type, kmax=3):
    return _json.loads(_qloop.verify_tsystem(type, kmax))


def verify_iota(type, level, cap=100000):
    return _json.loads(_qloop.verify_iota(type, level, cap))
