##
# File: BinaryReportWriter.py
# Date: 18-Mar-2026
#
#  Write methods for the msgpack report format.
#
#  Updates:
##
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"

import logging
import struct

import msgpack

from alexlab.api.CheckReports import toJsonValue
from alexlab.io.IoAdapterBase import IoAdapterBase

logger = logging.getLogger(__name__)

BINARY_REPORT_VERSION = "0.01"


class BinaryReportWriter(IoAdapterBase):
    """Writer for report.msgpack: the report.json content plus plot series,
    numeric series columns packed as little-endian float64."""

    def serialize(self, filePath, reportD, seriesD=None):
        """Serialize a report and its series.

        Args:
            filePath (str): output file path
            reportD (dict): report content
            seriesD (dict, optional): name -> (header, rows). Defaults to None.

        Returns:
            bool: completion status
        """
        try:
            series = {}
            for name, (header, rows) in sorted((seriesD or {}).items()):
                cols = []
                for ii, colName in enumerate(header):
                    colData = [row[ii] for row in rows]
                    cols.append({"name": colName, "data": self.__encodeColumn(colData)})
                series[name] = {"rowCount": len(rows), "columns": cols}
            data = {
                "version": BINARY_REPORT_VERSION,
                "encoder": "alexlab",
                "report": toJsonValue(reportD),
                "series": series,
            }
            payload = msgpack.packb(data, use_bin_type=True)
            return self._atomicWrite(filePath, lambda ofh: ofh.write(payload), mode="wb")
        except Exception as e:
            self._logError("Failing binary report write for %s with %s" % (filePath, str(e)))
        return False

    def __encodeColumn(self, colData):
        """Float64 little-endian bytes for numeric columns, the plain list otherwise."""
        if colData and all(isinstance(vl, (int, float)) and not isinstance(vl, bool) for vl in colData):
            return {"encoding": "float64-le", "data": struct.pack("<%dd" % len(colData), *[float(vl) for vl in colData])}
        return {"encoding": "list", "data": toJsonValue(colData)}
