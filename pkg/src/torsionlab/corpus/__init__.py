"""Corpus items: reproducible check suites with JSON verdict reports."""

from .fixtures import default_sequence, module_from_descriptor, nonwpr_descriptor
from .references import REFERENCE_INDEX, resolve
from .suite import (ALIASES, SPECS, ExampleSpec, SubCheck, VerdictReport, resolve_id, run_suite,
                    suite_exit_code, verify)

__all__ = ["ALIASES", "ExampleSpec", "REFERENCE_INDEX", "SPECS", "SubCheck", "VerdictReport",
           "default_sequence", "module_from_descriptor", "nonwpr_descriptor", "resolve", "resolve_id",
           "run_suite", "suite_exit_code", "verify"]
