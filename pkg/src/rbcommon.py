"""Common tools shared by the library modules and the rbident command line.

Holds the exception hierarchy, configuration file helpers, logging setup and
the output writer used by :mod:`rbcli`.
"""

# Global imports
import configparser
import json
import pathlib
import sys
from typing import Dict, Optional

# 3rd party imports
import colorama
from loguru import logger


# =============================================================================
class RbidentError(Exception):
    """Base class of all errors raised by this package."""


# =============================================================================
class DslSyntaxError(RbidentError):
    """Malformed identity text. Carries the 1-based line and column."""

    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"{msg} (line {line}, col {col})")
        self.msg = msg
        self.line = line
        self.col = col


# =============================================================================
class UnknownMacroError(RbidentError):
    pass


# =============================================================================
class ArityError(RbidentError):
    pass


# =============================================================================
class CarrierError(RbidentError):
    """A value or sampling plan does not belong to the model's carrier."""


# =============================================================================
class ModelSpecError(RbidentError):
    pass


# =============================================================================
class KindError(RbidentError):
    """A product token that the requested word kind cannot express."""


# =============================================================================
class RewriteError(RbidentError):
    pass


# =============================================================================
class DegreeError(RbidentError):
    pass


# =============================================================================
class ReportError(RbidentError):
    pass


# -----------------------------------------------------------------------------
def readconfig(filename, defaults: Optional[Dict[str, Dict[str, str]]] = None) -> configparser.ConfigParser:
    """Read configuration from the given INI file

    :param filename: Name of the configuration file to read, a missing file
        leaves the defaults in place
    :param defaults: section -> option -> value, read before the file
    """

    config = configparser.ConfigParser()
    if defaults:
        config.read_dict(defaults)
    config.read(filename)
    logger.debug(f"readconfig({filename=}) -> {config.sections()}")
    return config


# -----------------------------------------------------------------------------
def configure_logging(loglevel: str = "WARNING", logfile: Optional[str] = None) -> None:
    """Route loguru output to a file when given, else to stderr."""
    logger.remove()
    if logfile is not None:
        logger.add(logfile, level=loglevel.upper(), format="{time}\t{level}\t{message}")
    else:
        logger.add(sys.stderr, level=loglevel.upper(), format="{level}\t{message}")


# -----------------------------------------------------------------------------
def to_json(payload) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation)."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


# -----------------------------------------------------------------------------
def colored(text: str, color: str, use_color: bool = True) -> str:
    """Wrap text in a colorama foreground color."""
    if not use_color:
        return text
    return getattr(colorama.Fore, color) + text + colorama.Fore.RESET


# -----------------------------------------------------------------------------
def write_output(text: str, output: Optional[str] = None) -> None:
    """Print text, or write it to the given path."""
    if output:
        pathlib.Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info(f"wrote {output}")
    else:
        print(text)
