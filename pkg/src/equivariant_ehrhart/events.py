"""Event types and progress events for the equivariant Ehrhart pipeline."""

import logging
from dataclasses import dataclass
from enum import Enum, auto

logger = logging.getLogger(__name__)


class EventType(Enum):
    """Stages of a pipeline run, in emission order per class."""
    CLASS_START = auto()
    CLASS_END = auto()
    PIPELINE_END = auto()


@dataclass(frozen=True)
class ProgressEvent:
    """One step of a pipeline run.

    Attributes:
        type: Stage that was reached
        message: Human-readable message
        completed: Number of conjugacy classes finished
        total: Number of conjugacy classes
        data: Class index, fixed dimension and cache flag where they apply
    """
    type: EventType
    message: str
    completed: int
    total: int
    data: dict | None = None

    @property
    def fraction(self) -> float:
        """Share of classes finished, 1.0 for an empty run."""
        return self.completed / self.total if self.total else 1.0


def log_progress(event: ProgressEvent) -> None:
    """Progress callback that reports through the module logger.

    Class starts go to DEBUG; finished classes and the end of the run to INFO.
    """
    level = logging.DEBUG if event.type is EventType.CLASS_START else logging.INFO
    logger.log(level, "[%3.0f%%] %s", 100 * event.fraction, event.message)
