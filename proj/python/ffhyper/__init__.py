"""Finite-field character sums, Greene hypergeometric functions and elliptic curve traces.

Field elements are plain integers: the canonical index sum(d_i * p**i) of the
element's coordinates in the polynomial basis.
"""

import json

from ._ffhyper import FFHyperError, Field, __version__, is_prime, prime_power
from . import _ffhyper

__all__ = [
    "FFHyperError",
    "Field",
    "__version__",
    "bench",
    "identities",
    "is_prime",
    "prime_power",
    "verify",
]


def verify(
    q_min=5,
    q_max=100,
    congruence="both",
    theorems=("1.1", "1.2", "3.1", "3.2"),
    sampling="exhaustive",
    samples=200,
    seed=None,
    exhaustive_max=49,
    records="all",
    include_skipped=False,
    threads=0,
):
    """Compares each formula with point counting over a range of fields; returns the report dict."""
    return json.loads(
        _ffhyper._verify_json(
            q_min, q_max, congruence, list(theorems), sampling, samples, seed,
            exhaustive_max, records, include_skipped, threads,
        )
    )


def identities(q_min=5, q_max=50, threads=0):
    """Runs the character sum identity checks for every odd prime power in range."""
    return json.loads(_ffhyper._identities_json(q_min, q_max, threads))


def bench(q=2000, reps=1):
    """Times direct vs DFT Gauss tables and formula vs naive traces."""
    return json.loads(_ffhyper._bench_json(q, reps))
