"""Exception hierarchy shared by every stage of the translator."""


class EvoMTError(Exception):
    """Base class for all errors raised by evo_mt."""


class IoFailure(EvoMTError, OSError):
    """A resource file could not be read or written."""


class MalformedRow(EvoMTError, ValueError):
    def __init__(self, path, line, reason):
        self.path = str(path)
        self.line = line
        self.reason = reason
        super().__init__(f"{self.path}:{line}: {reason}")


class EmptyCorpus(EvoMTError, ValueError):
    pass


class UnknownWord(EvoMTError, KeyError):
    def __init__(self, word):
        self.word = word
        super().__init__(word)

    def __str__(self):
        return f"unknown word: {self.word!r}"


class NoPairData(EvoMTError, ValueError):
    pass


class FormatVersionMismatch(EvoMTError, ValueError):
    pass


class ChecksumMismatch(EvoMTError, ValueError):
    pass


class ModelFormatError(EvoMTError, ValueError):
    pass


class GrammarSyntaxError(EvoMTError, ValueError):
    def __init__(self, line, column, expected):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"line {line}, column {column}: expected {expected}")


class ForwardReference(EvoMTError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"rule references undefined chunk {name!r}")


class DuplicateRule(EvoMTError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"rule {name!r} defined twice")


class NoVerbFound(EvoMTError):
    """Raised by target derivation when there is nothing to move; ``target`` holds the input order."""

    def __init__(self, target):
        self.target = list(target)
        super().__init__("sentence has no verb; target equals input order")
