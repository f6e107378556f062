##
# File:    IoAdapterBase.py
# Date:    4-Feb-2026
# Version: 0.001 Initial version
#
# Updates:
#  17-Mar-2026  atomic replace helper for report artifacts
##
"""
Base class presenting the file methods shared by the scenario and report adapters.

"""

__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import os
import tempfile
import time
from urllib.parse import urlsplit

from alexlab.io.AlexlabExceptions import AlexlabError

logger = logging.getLogger(__name__)


class IoAdapterBase(object):
    """Base class presenting essential scenario and report I/O methods."""

    def __init__(self, *args, **kwargs):
        """General options controlling I/O method operations:

        Args:
            raiseExceptions (bool, optional): Flag to indicate that API errors should generate exceptions (True) or catch and log errors (default=False)
            timing (bool, optional):  log timing details for read and write steps (default=False)

        """
        _ = args
        self._raiseExceptions = kwargs.get("raiseExceptions", False)
        self._timing = kwargs.get("timing", False)

    def _logError(self, msg):
        """Convenience method to log error messages and optionally raise general exceptions (AlexlabError)."""
        if self._raiseExceptions:
            raise AlexlabError(msg)
        logger.error(msg)

    def _isLocal(self, locator):
        """Returns true if input string can be interpreted as a local file path."""
        try:
            locSp = urlsplit(str(locator))
            return locSp.scheme in ["", "file"]
        except Exception as e:
            logger.exception("For locator %r failing with %s", locator, str(e))
        return None

    def _fileExists(self, filePath):
        """Verify that input file path exists and is readable."""
        if os.access(filePath, os.R_OK):
            logger.debug("Reading from file path %s", filePath)
            return True
        self._logError("Missing file %r" % filePath)
        return False

    def _chooseTemporaryPath(self, filePath, outDirPath=None):
        """Select a directory for temporary files in the priority order
        outDirPath, directory containing filePath, current working directory, system temporary directory.
        """
        if outDirPath:
            return outDirPath
        for oPath in [os.path.dirname(os.path.abspath(filePath)), ".", tempfile.gettempdir()]:
            if os.access(oPath, os.W_OK):
                return oPath
        return None

    def _atomicWrite(self, filePath, writer, mode="w", encoding="utf-8"):
        """Write through a temporary file in the target directory, then rename over filePath.

        Args:
            filePath (str): destination
            writer (callable): writer(fileHandle) producing the content
            mode (str, optional): "w" or "wb". Defaults to "w".
            encoding (str, optional): text encoding. Defaults to "utf-8".

        Returns:
            bool: completion status
        """
        startTime = time.time()
        dirPath = self._chooseTemporaryPath(filePath, outDirPath=os.path.dirname(os.path.abspath(filePath)))
        tmpPath = None
        try:
            fd, tmpPath = tempfile.mkstemp(prefix=".alexlab-", suffix=".tmp", dir=dirPath)
            kw = {"encoding": encoding, "newline": "\n"} if "b" not in mode else {}
            with os.fdopen(fd, mode, **kw) as ofh:
                writer(ofh)
            os.replace(tmpPath, filePath)
            if self._timing:
                logger.info("Timing file %s written in %.4f seconds", filePath, time.time() - startTime)
            return True
        except Exception as e:
            self._cleanupFile(tmpPath is not None and os.path.exists(tmpPath), tmpPath)
            self._logError("Failing write for %s with %s" % (filePath, str(e)))
        return False

    def _cleanupFile(self, test, filePath):
        """Remove the input file path subject to the input test condition."""
        try:
            if test:
                os.remove(filePath)
        except Exception:
            pass
