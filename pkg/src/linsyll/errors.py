class ParseError(ValueError):
    """Malformed diagram, formula, or syllogism text."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position})" if text else message)


class RuleShapeMismatch(ValueError):
    pass


class NotConcatenable(ValueError):
    pass


class TranslationFailure(RuntimeError):
    pass


class NonAtomicIdentity(ValueError):
    pass
