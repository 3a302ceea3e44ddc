"""Exception types raised across the snaplens package.

Everything derives from :class:`SnaplensError` so callers (and the CLI)
can catch one base class for data problems.
"""


class SnaplensError(Exception):
    """Base class for all snaplens data and usage errors."""


# corpus ---------------------------------------------------------------

class MalformedRecord(SnaplensError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class DuplicateId(SnaplensError):
    def __init__(self, doc_id):
        super().__init__(f"duplicate document id: {doc_id!r}")
        self.doc_id = doc_id


class EmptyDocument(SnaplensError):
    pass


# sentiment ------------------------------------------------------------

class MalformedLine(SnaplensError):
    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class OutOfRangeScore(SnaplensError):
    def __init__(self, term, score):
        super().__init__(f"score {score} for {term!r} outside [-5, 5]")
        self.term = term
        self.score = score


class DuplicateTerm(SnaplensError):
    def __init__(self, term):
        super().__init__(f"duplicate lexicon term: {term!r}")
        self.term = term


class InvalidTier(SnaplensError):
    pass


class InvalidRange(SnaplensError):
    pass


class DegenerateInput(SnaplensError):
    pass


# classifier -----------------------------------------------------------

class InsufficientClasses(SnaplensError):
    pass


class EmptyVocabulary(SnaplensError):
    pass


class TooFewExamples(SnaplensError):
    pass


# terms ----------------------------------------------------------------

class EmptyCorpus(SnaplensError):
    pass


class MissingScore(SnaplensError):
    def __init__(self, doc_id):
        super().__init__(f"no document score for doc id {doc_id!r}")
        self.doc_id = doc_id


# geo ------------------------------------------------------------------

class DegenerateBBox(SnaplensError):
    pass


class DegenerateField(SnaplensError):
    """Reserved for zero-variance cell fields.

    A uniform field is defined to produce z = 0 everywhere (the local
    sums equal their expectations exactly), so the hot-spot statistic
    never raises this itself; it exists for callers that want to treat
    zero variance as an input error.
    """


class TooFewCells(SnaplensError):
    pass


# votes ----------------------------------------------------------------

class MalformedFile(SnaplensError):
    pass


class UnknownLegislator(SnaplensError):
    def __init__(self, legislator_id):
        super().__init__(f"legislator {legislator_id!r} appears in no filtered bill")
        self.legislator_id = legislator_id


class BillsFetchError(SnaplensError):
    pass


# service --------------------------------------------------------------

class PipelineError(SnaplensError):
    """Wraps an error from a pipeline stage with source context."""

    def __init__(self, stage, detail):
        super().__init__(f"{stage}: {detail}")
        self.stage = stage


class BindFailure(SnaplensError):
    pass
