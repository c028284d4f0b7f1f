from zstdlib import Enum


# pylint: disable=bad-mcs-method-argument,bad-mcs-classmethod-argument
class ExitCode(Enum):
    """
    Process exit codes of the drgdist CLI
    """

    ok: int = 0  #           Everything parsed and every check passed
    parse_error: int = 1  #  Malformed intersection array or bad command line
    rejected: int = 2  #     Infeasible array, failed conjecture / oracle check, or table mismatch
