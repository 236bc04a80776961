class ClassGraphException(Exception):
    pass


class ImproperlyConfiguredGroupSettings(ClassGraphException):
    pass


class CapExceeded(ClassGraphException):
    pass


class DegreeMismatch(ClassGraphException):
    pass


class InvalidPermutation(ClassGraphException):
    pass


class ElementNotInGroup(ClassGraphException):
    pass


class NotNormal(ClassGraphException):
    pass


class ParentMismatch(ClassGraphException):
    pass


class NotApplicable(ClassGraphException):
    pass


class InvalidSpec(ClassGraphException):
    pass


class ParseError(ClassGraphException):
    pass


class SelectorError(ClassGraphException):
    pass
