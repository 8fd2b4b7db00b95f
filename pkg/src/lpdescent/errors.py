"""Exception hierarchy. Every error carries a machine-readable reason code."""

from __future__ import annotations


class DescentError(Exception):
    code = "E_GENERIC"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class FieldMismatchError(DescentError):
    code = "E_FIELD_MISMATCH"


class FieldDefinitionError(DescentError):
    code = "E_FIELD_DEFINITION"


class PreconditionError(DescentError):
    code = "E_PRECONDITION"


class RealizabilityError(DescentError):
    code = "E_UNREALIZABLE"


class OrbitInfeasibleError(DescentError):
    code = "E_ORBIT_INFEASIBLE"


class UniverseError(DescentError):
    code = "E_UNIVERSE"


class OracleMissingError(UniverseError):
    code = "E_ORACLE_MISSING"


class ParameterError(DescentError):
    code = "E_PARAMETER"


class TypeMismatchError(DescentError):
    code = "E_TYPE"


class PsiDependentError(DescentError):
    code = "E_PSI_DEPENDENT"


class BudgetExceededError(DescentError):
    code = "E_BUDGET"


class RelevanceError(DescentError):
    code = "E_IRRELEVANT_PAIR"


class SessionError(DescentError):
    code = "E_SESSION"
