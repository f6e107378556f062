#
#
from alexlab.io.AlexlabExceptions import AlexlabError  # noqa: F401
