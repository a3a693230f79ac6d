class InvalidInput(ValueError):
    """Raised for text or alphabets the library cannot accept."""


class InvalidHandle(ValueError):
    """A MAW handle does not fit the run-length string it is expanded against."""


class InvalidSpec(ValueError):
    """A lower-bound family was requested with an out-of-range size."""


class BoundViolation(AssertionError):
    def __init__(self, lemma: str, detail: str):
        super().__init__(f"{lemma}: {detail}")
        self.lemma = lemma
        self.detail = detail
