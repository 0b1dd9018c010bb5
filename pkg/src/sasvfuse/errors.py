"""Exception types shared across the toolkit."""

from __future__ import annotations


class SasvError(Exception):
    """Base class for all toolkit errors."""


class MalformedLine(SasvError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class DuplicateEnrollment(SasvError):
    def __init__(self, speaker_id: str, utt_id: str):
        self.speaker_id = speaker_id
        self.utt_id = utt_id
        super().__init__(f"duplicate enrollment utterance {utt_id!r} for speaker {speaker_id!r}")


class UnenrolledSpeaker(SasvError):
    def __init__(self, speaker_id: str, trial_index: int):
        self.speaker_id = speaker_id
        self.trial_index = trial_index
        super().__init__(f"speaker {speaker_id!r} (first seen at trial {trial_index}) has no enrollment")


class BadMagic(SasvError):
    pass


class DimMismatch(SasvError):
    def __init__(self, record_index: int, expected: int, got: int):
        self.record_index = record_index
        self.expected = expected
        self.got = got
        super().__init__(f"record {record_index}: expected dim {expected}, got {got}")


class DuplicateUtterance(SasvError):
    def __init__(self, utt_id: str):
        self.utt_id = utt_id
        super().__init__(f"duplicate utterance id {utt_id!r}")


class ZeroVector(SasvError):
    def __init__(self, utt_id: str):
        self.utt_id = utt_id
        super().__init__(f"utterance {utt_id!r} has an all-zero embedding")


class TruncatedFile(SasvError):
    pass


class LengthMismatch(SasvError):
    pass


class ZeroNorm(SasvError):
    pass


class MissingUtterance(SasvError):
    def __init__(self, utt_id: str, model_id: str = ""):
        self.utt_id = utt_id
        self.model_id = model_id
        where = f" in table {model_id!r}" if model_id else ""
        super().__init__(f"utterance {utt_id!r} not found{where}")


class ShapeMismatch(SasvError):
    pass


class EmptyBatch(SasvError):
    pass


class EmptyClass(SasvError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"no scores for class {which!r}")


class EmptyInput(SasvError):
    pass


class SpecInvalid(SasvError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
