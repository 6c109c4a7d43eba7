"""
Workbench configuration read from the environment (and an optional .env file).
"""

import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

FILE_FORMAT_HEADER = "noloopwb/1"


class WorkbenchConfig:
    """Defaults for resolutions, searches and the bundled corpus."""

    # Projective dimension depth bound D
    PD_DEPTH = int(os.getenv("NOLOOPWB_DEPTH", "20"))

    # Node budget for alpha-filtration search
    SEARCH_BUDGET = int(os.getenv("NOLOOPWB_BUDGET", "5000"))

    # Guard on the number of paths enumerated while building an algebra
    MAX_PATHS = int(os.getenv("NOLOOPWB_MAX_PATHS", "200000"))

    # Size guard on syzygies during resolutions
    MAX_SYZYGY_DIM = int(os.getenv("NOLOOPWB_MAX_SYZYGY_DIM", "2000"))

    # Report repeating syzygy fingerprints as infinite pd (off: hint only)
    PERIODICITY_IS_PROOF = os.getenv("NOLOOPWB_PERIODICITY_IS_PROOF", "false").lower() == "true"

    # Corpus location; defaults to the data shipped with the package
    CORPUS_DIR = os.getenv(
        "NOLOOPWB_CORPUS_DIR",
        os.path.join(os.path.dirname(__file__), "corpus", "data"),
    )

    # Debug mode
    DEBUG = os.getenv("NOLOOPWB_DEBUG", "false").lower() == "true"

    @classmethod
    def validate(cls):
        """Warn about settings that cannot work."""
        if cls.PD_DEPTH < 0:
            logger.warning("NOLOOPWB_DEPTH=%s is negative; resolutions will stop immediately", cls.PD_DEPTH)
        if cls.SEARCH_BUDGET <= 0:
            logger.warning("NOLOOPWB_BUDGET=%s leaves no room for filtration search", cls.SEARCH_BUDGET)
        if not os.path.isdir(cls.CORPUS_DIR):
            logger.warning("Corpus directory %s does not exist", cls.CORPUS_DIR)

        if cls.DEBUG:
            logger.debug("Workbench config:")
            logger.debug("  Depth: %s", cls.PD_DEPTH)
            logger.debug("  Budget: %s", cls.SEARCH_BUDGET)
            logger.debug("  Max paths: %s", cls.MAX_PATHS)
            logger.debug("  Periodicity is proof: %s", cls.PERIODICITY_IS_PROOF)
            logger.debug("  Corpus: %s", cls.CORPUS_DIR)


def configure_logging(level=None):
    """Install the root handler once; DEBUG when NOLOOPWB_DEBUG is set."""
    if level is None:
        level = logging.DEBUG if WorkbenchConfig.DEBUG else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
