##
# File:  AlexlabExceptions.py
# Date:  2026-02-02
#
# Updates:
#   2026-03-11  add frame, order and instance errors for the comparison checks
#   2026-04-20  AlexlabSyntaxError carries the offending line and column
##
__docformat__ = "google en"
__author__ = "alexlab developers"
__email__ = "alexlab-dev@users.noreply.github.com"
__license__ = "Apache 2.0"


class AlexlabError(Exception):
    """Class for catching general errors"""


class AlexlabDomainError(AlexlabError):
    """Point outside the domain of an evaluator, or a nonpositive sample where logs are taken"""


class AlexlabBracketError(AlexlabError):
    """Root bracket endpoints carry the same sign"""


class AlexlabConvergenceError(AlexlabError):
    """Iteration cap exceeded (internal error)"""


class AlexlabArgumentError(AlexlabError):
    """Argument out of range"""


class AlexlabConeError(AlexlabError):
    """Curvature vector outside the admissible cone"""


class AlexlabPoleError(AlexlabError):
    """Closed-form revolution curvatures requested at a pole cap"""


class AlexlabDegenerateError(AlexlabError):
    """Local graph vanishes identically along the probed direction"""


class AlexlabConsistencyError(AlexlabError):
    """Internal consistency violated (for instance no tangency on a closed surface)"""


class AlexlabGeometryError(AlexlabError):
    """Degenerate surface geometry"""


class AlexlabPreconditionError(AlexlabError):
    """Operation precondition not met"""


class AlexlabMembershipError(AlexlabError):
    """Node outside the pairing region"""


class AlexlabFrameError(AlexlabError):
    """Local frame violates u_t > 0"""


class AlexlabOrderError(AlexlabError):
    """Vanishing order inconsistent with the declared expansion"""


class AlexlabInstanceError(AlexlabError):
    """Comparison instance is internally inconsistent"""


class AlexlabInputError(AlexlabError):
    """Invalid user supplied function or parameter"""


class AlexlabSyntaxError(AlexlabError):
    """Class for catching scenario syntax errors"""

    def __init__(self, msg, line=None, column=None):
        super(AlexlabSyntaxError, self).__init__(msg)
        self.line = line
        self.column = column
