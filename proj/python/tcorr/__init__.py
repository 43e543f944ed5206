"""Python bindings for the ternary decimation correlation toolkit."""

import json as _json

from . import _tcorr
from ._tcorr import Tower, field_info, quadratic_weil_sum, run_cli

__all__ = [
    "Tower",
    "audit",
    "closed_form_table",
    "field_info",
    "quadratic_weil_sum",
    "run_cli",
    "sequences",
    "spectrum",
]


def spectrum(r, case="A", method="brute", domain="E", workers=1, gauss_fast_path=False):
    """Spectrum report as a dict with keys r, n, d, case, domain, method, spectrum, moments."""
    return _json.loads(_tcorr.spectrum_json(r, case, method, domain, workers, gauss_fast_path))


def closed_form_table(r, case="A", variant="moment_consistent"):
    return _json.loads(_tcorr.table_json(r, case, variant))


def audit(r, case="A", variant="moment_consistent", method="reduced"):
    """Audit of a computed spectrum (domain E) against one table variant."""
    return _json.loads(_tcorr.audit_json(r, case, variant, method))


def sequences(r, case="A", correlation=False):
    """(a, b) digit strings of the m-sequence and its decimation, plus C(tau) if requested."""
    a, b, corr = _tcorr.sequences(r, case, correlation)
    return (a, b, corr) if correlation else (a, b)
