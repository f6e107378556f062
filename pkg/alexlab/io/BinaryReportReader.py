##
# File: BinaryReportReader.py
# Date: 18-Mar-2026
#
#  Reader methods for the msgpack report format.
#
#  Updates:
##
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import gzip
import io
import logging
import struct
from contextlib import closing

import msgpack
import requests

from alexlab.io.IoAdapterBase import IoAdapterBase

logger = logging.getLogger(__name__)


class BinaryReportReader(IoAdapterBase):
    """Reader for report.msgpack files written by BinaryReportWriter."""

    def deserialize(self, locator):
        """Deserialize the binary report stored at the file/URL locator.

        Args:
            locator (str): input file path or URL

        Returns:
            (dict, dict): report content and series name -> (header, rows); (None, {}) on failure
        """
        try:
            if self._isLocal(locator):
                with gzip.open(locator, mode="rb") if locator[-3:] == ".gz" else open(locator, "rb") as fh:
                    return self.__deserialize(fh)
            if locator.endswith(".gz"):
                customHeader = {"Accept-Encoding": "gzip"}
                with closing(requests.get(locator, headers=customHeader, timeout=60)) as fh:
                    return self.__deserialize(gzip.GzipFile(fileobj=io.BytesIO(fh.content)))
            with closing(requests.get(locator, timeout=60)) as fh:
                return self.__deserialize(io.BytesIO(fh.content))
        except Exception as e:
            self._logError("Failing binary report read for %s with %s" % (locator, str(e)))
        return None, {}

    def __deserialize(self, fh):
        bD = msgpack.unpack(fh, raw=False)
        logger.debug("Binary report version %r encoder %r", bD.get("version"), bD.get("encoder"))
        seriesD = {}
        for name, sD in bD.get("series", {}).items():
            header, cols = [], []
            for col in sD["columns"]:
                header.append(col["name"])
                cols.append(self.__decodeColumn(col["data"], sD["rowCount"]))
            seriesD[name] = (header, [list(row) for row in zip(*cols)])
        return bD.get("report"), seriesD

    def __decodeColumn(self, colD, rowCount):
        if colD["encoding"] == "float64-le":
            return list(struct.unpack("<%dd" % rowCount, colD["data"]))
        return list(colD["data"])
