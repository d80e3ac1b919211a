"""Exception hierarchy."""

from __future__ import annotations


class LexModelError(Exception):
    """Base class for every error raised by this package."""


class ModelError(LexModelError, ValueError):
    """A model value violates a construction invariant."""


class InvalidModel(LexModelError, ValueError):
    """A writer was handed a model that fails its precondition profile."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SameLanguage(LexModelError, ValueError):
    """Both sides of an equivalence query name the same language."""


class DuplicateObjectLanguage(LexModelError, ValueError):
    """Two lexica handed to a projection share their object language."""


class ParseError(LexModelError):
    """Fatal finding raised while reading a document.

    ``finding`` holds the diagnostic that stopped the parse.
    """

    def __init__(self, finding):
        super().__init__(f'{finding.code} at {finding.path}: {finding.message}')
        self.finding = finding


class MalformedXml(ParseError, ValueError):
    pass


class MissingLang(ParseError):
    pass


class EmptyTerm(ParseError):
    pass


class UnknownElement(ParseError):
    pass


class CitWithoutQuote(ParseError):
    pass


_BY_CODE = {
    'MALFORMED_XML': MalformedXml,
    'MISSING_LANG': MissingLang,
    'EMPTY_TERM': EmptyTerm,
    'UNKNOWN_ELEMENT': UnknownElement,
    'CIT_WITHOUT_QUOTE': CitWithoutQuote,
}


def error_for(finding) -> ParseError:
    return _BY_CODE.get(finding.code, ParseError)(finding)
