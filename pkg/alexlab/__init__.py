#
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"
__version__ = "0.10"

__apiUrl__ = "https://github.com/alexlab-dev/alexlab"
