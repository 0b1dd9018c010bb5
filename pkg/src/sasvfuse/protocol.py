"""Trial protocol and enrollment map parsing.

File formats are plain whitespace-separated text, one record per line.
Blank lines and lines starting with ``#`` are skipped.  LF and CRLF line
endings are both accepted.  Label tokens are case-insensitive on input and
written in canonical lowercase on output.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicateEnrollment, MalformedLine, UnenrolledSpeaker


class TrialLabel(enum.Enum):
    TARGET = "target"
    NONTARGET = "nontarget"
    SPOOF = "spoof"

    @classmethod
    def from_token(cls, token: str) -> "TrialLabel | None":
        try:
            return cls(token.lower())
        except ValueError:
            return None


@dataclass(frozen=True, slots=True)
class Trial:
    """One evaluation unit: an enrolled speaker tested against one utterance."""

    speaker_id: str
    test_utt_id: str
    label: TrialLabel

    def __post_init__(self):
        for name, value in (("speaker_id", self.speaker_id), ("test_utt_id", self.test_utt_id)):
            if not value or any(ch.isspace() for ch in value):
                raise ValueError(f"{name} must be non-empty and whitespace-free, got {value!r}")


# speaker_id -> ordered enrollment utterance ids
EnrollmentMap = dict[str, list[str]]


@dataclass
class ProtocolSet:
    trials: list[Trial]
    enrollment: EnrollmentMap
    partition_name: str = ""
    label_counts: dict[TrialLabel, int] = field(default_factory=dict)


def _records(text: str):
    """Yield (line_no, fields) for every non-blank, non-comment line."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line.split()


def parse_trials(text: str) -> list[Trial]:
    """Parse lines ``<speaker_id> <test_utt_id> <label>`` into trials, in file order."""
    trials = []
    for line_no, fields in _records(text):
        if len(fields) != 3:
            raise MalformedLine(line_no, f"expected 3 fields, got {len(fields)}")
        label = TrialLabel.from_token(fields[2])
        if label is None:
            raise MalformedLine(line_no, f"unknown label token {fields[2]!r}")
        trials.append(Trial(fields[0], fields[1], label))
    return trials


def parse_enrollment(text: str) -> EnrollmentMap:
    """Parse lines ``<speaker_id> <utt_id>`` into an enrollment map.

    Speakers and their utterances keep first-seen order.  A repeated
    (speaker, utterance) pair raises DuplicateEnrollment.
    """
    enrollment: EnrollmentMap = {}
    for line_no, fields in _records(text):
        if len(fields) != 2:
            raise MalformedLine(line_no, f"expected 2 fields, got {len(fields)}")
        speaker_id, utt_id = fields
        utts = enrollment.setdefault(speaker_id, [])
        if utt_id in utts:
            raise DuplicateEnrollment(speaker_id, utt_id)
        utts.append(utt_id)
    return enrollment


def validate_protocol(
    trials: list[Trial], enrollment: EnrollmentMap, partition_name: str = ""
) -> ProtocolSet:
    """Check that every trial speaker is enrolled and record per-label counts."""
    for index, trial in enumerate(trials):
        if trial.speaker_id not in enrollment:
            raise UnenrolledSpeaker(trial.speaker_id, index)
    counts = Counter(t.label for t in trials)
    label_counts = {label: counts.get(label, 0) for label in TrialLabel}
    return ProtocolSet(trials, enrollment, partition_name, label_counts)


def serialize_trials(trials: list[Trial]) -> str:
    return "".join(f"{t.speaker_id} {t.test_utt_id} {t.label.value}\n" for t in trials)


def serialize_enrollment(enrollment: EnrollmentMap) -> str:
    lines = []
    for speaker_id, utts in enrollment.items():
        for utt_id in utts:
            lines.append(f"{speaker_id} {utt_id}\n")
    return "".join(lines)


def read_trials(path: str | Path) -> list[Trial]:
    return parse_trials(Path(path).read_text(encoding="utf-8"))


def read_enrollment(path: str | Path) -> EnrollmentMap:
    return parse_enrollment(Path(path).read_text(encoding="utf-8"))


def write_trials(path: str | Path, trials: list[Trial]) -> None:
    Path(path).write_text(serialize_trials(trials), encoding="utf-8", newline="\n")


def write_enrollment(path: str | Path, enrollment: EnrollmentMap) -> None:
    Path(path).write_text(serialize_enrollment(enrollment), encoding="utf-8", newline="\n")
