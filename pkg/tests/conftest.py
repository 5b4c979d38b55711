"""Shared corpus fixtures.

The corpus is every concrete group the checks exercise, each realized
deterministically from its spec string.  Oracle-backed tests filter by
order so exhaustive scans stay fast.
"""

from __future__ import annotations

import pytest

from carterlab.linear.groupspec import realize

CORPUS_SPECS = [
    "Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)",
    "Alt(4)", "Alt(5)", "Alt(6)",
    "SL(2,3)", "GL(2,3)",
    "PSL(2,3)", "PGL(2,3)", "PSL(2,5)", "PGL(2,5)", "PSL(2,7)", "PGL(2,7)",
    "PSL(2,9)", "PSL(2,11)", "PSL(2,13)",
    "PSU(3,2)", "PGU(3,2)", "PSL(3,2)",
    "PGammaL(2,8)",
    "W(A2)", "W(C2)", "W(A3)", "W(C3)", "W(G2)",
]


@pytest.fixture(scope="session")
def corpus():
    return {spec: realize(spec).group for spec in CORPUS_SPECS}


def corpus_upto(corpus, cap):
    return {spec: G for spec, G in corpus.items() if G.order() <= cap}
