"""Exception hierarchy for epirules."""


class EpirulesError(Exception):
    pass


# value domain

class ValueDomainError(EpirulesError, ValueError):
    pass


class MissingOne(ValueDomainError):
    pass


class ClosureViolation(ValueDomainError):
    def __init__(self, x, y, missing, op):
        self.x, self.y, self.missing, self.op = x, y, missing, op
        super().__init__(f"{x} {op} {y} = {missing} is not in the value set")


class HalfNotInSet(ValueDomainError):
    pass


class OutOfRange(ValueDomainError):
    pass


# language

class RuleSyntaxError(EpirulesError, ValueError):
    def __init__(self, message, text="", pos=0):
        self.text, self.pos = text, pos
        super().__init__(f"{message} at position {pos}" if text else message)


class InvalidRule(EpirulesError, ValueError):
    pass


class DuplicateConditionArgument(InvalidRule):
    pass


class HeadInConditions(InvalidRule):
    pass


# argumentation model

class ModelError(EpirulesError, ValueError):
    pass


class LengthMismatch(ModelError):
    pass


class ConflictingRelation(ModelError):
    pass


class EmptyRelationSet(ModelError):
    pass


# semantics

class UnknownArgument(EpirulesError, KeyError):
    pass


class CapExceeded(EpirulesError, ValueError):
    pass


class InvalidDistribution(EpirulesError, ValueError):
    pass


# data

class MissingValue(EpirulesError, KeyError):
    pass


class EmptyDataset(EpirulesError, ValueError):
    pass


class DatasetTooSmall(EpirulesError, ValueError):
    pass


class SchemaError(EpirulesError, ValueError):
    pass


class ValueOffGrid(EpirulesError, ValueError):
    pass


class LikertOutOfRange(OutOfRange):
    pass


class ConfigError(EpirulesError, ValueError):
    pass
