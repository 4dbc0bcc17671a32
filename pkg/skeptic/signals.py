"""
Signal handlers and custom exceptions
-------------------------------------

Long experiment runs should stop cleanly on an interrupt, so the command line
installs a signal handler before it starts a driver.  The custom exceptions
raised by the library are also defined here.

"""
import signal
import logging

logger = logging.getLogger(__name__)


class SignalHandlerFactory:  # pragma: no cover
    """A class for containing classmethods to create signal handlers"""

    @classmethod
    def signal_handler(cls) -> callable:
        """Returns a signal-checking, exiting closure

        :returns: a closure that looks for :const:`~signal.SIGTERM` or
          :const:`~signal.SIGINT` and raises :exc:`SystemExit` if it finds
          either one.

        """

        def signal_handler_closure(sig, frame=None):
            if sig in {signal.SIGTERM, signal.SIGINT}:
                logger.info(
                    f"skeptic exiting on {signal.Signals(sig).name} ({sig})."
                )
                raise SystemExit(130)

        return signal_handler_closure

    @classmethod
    def install(cls) -> None:
        """Install the exiting closure for SIGINT and SIGTERM"""
        handler = cls.signal_handler()
        signal.signal(signal.SIGINT, handler)
        signal.signal(signal.SIGTERM, handler)


class SkepticException(Exception):
    """Parent class for skeptic exceptions"""


class ContractViolation(SkepticException, ValueError):
    """A precondition of an operation was not met"""


class DimensionMismatch(ContractViolation):
    """Two objects disagree about the number of labels"""


class IndexOutOfRange(ContractViolation):
    """A label index lies outside 1..m"""


class NonDegenerateTree(ContractViolation):
    """A precise quantity was requested from an imprecise tree"""


class ContainmentViolation(ContractViolation):
    """An outer approximation does not contain the exact prediction set"""


class EnumerationTooLarge(SkepticException):
    """The label count exceeds the guard of an enumerating operation"""


class InsufficientSupport(SkepticException):
    """A label class has too few instances to train or split on"""


class DatasetSchemaError(SkepticException):
    """A dataset file does not follow the expected layout"""


class ConfigurationError(SkepticException):
    """There was an error in the setting of configuration elements"""


class AuditFailure(SkepticException):
    """An experiment audit or a worked-example check failed"""
