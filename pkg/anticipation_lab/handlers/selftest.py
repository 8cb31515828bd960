"""
Runs the acceptance suite from the command line
"""
from anticipation_lab.acceptance import run_acceptance
from anticipation_lab.acceptance import selftest_document
from anticipation_lab.configuration import RunConfig
from anticipation_lab.system import logging
from anticipation_lab.utilities.types import command_handler

from .output import emit


@command_handler("selftest")
def selftest(configuration: RunConfig) -> int:
    """
    Exits with 0 only if every criterion passed
    """
    results = run_acceptance(threads=configuration.threads, quick=configuration.quick)
    document = selftest_document(results, quick=configuration.quick)

    failed = [result.name for result in results if not result.passed]
    if failed:
        logging.error(f"{len(failed)} of {len(results)} acceptance criteria failed: {', '.join(failed)}")
    else:
        logging.info(f"All {len(results)} acceptance criteria passed")

    emit(configuration, document.to_json())
    return 0 if document.passed else 1
