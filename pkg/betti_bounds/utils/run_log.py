"""
Run Logging System
Structured JSON records for every computation the CLI performs
"""

import json
import logging
import time
from contextlib import contextmanager
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class RunEventType(Enum):
    """Types of run events"""
    COMPUTATION = "computation"
    VALIDATION = "validation"


class RunSeverity(Enum):
    """Run event severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class RunLogger:
    """JSON event log for computations"""

    def __init__(self, log_file: Optional[Path] = None):
        self.run_logger = logging.getLogger('betti_bounds.runs')
        self.run_logger.setLevel(logging.INFO)

        has_file = any(isinstance(h, logging.FileHandler) for h in self.run_logger.handlers)
        if log_file is not None and not has_file:
            try:
                Path(log_file).parent.mkdir(parents=True, exist_ok=True)
                handler = logging.FileHandler(log_file, encoding='utf-8')
                handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
                self.run_logger.addHandler(handler)
            except OSError as e:
                logger.warning(f"Run log file {log_file} unavailable: {e}")
        if not self.run_logger.handlers:
            # keep run records off stderr, which carries CLI errors
            self.run_logger.addHandler(logging.NullHandler())

        # Prevent duplicate logs
        self.run_logger.propagate = False

    def log_event(self,
                  event_type: RunEventType,
                  severity: RunSeverity,
                  command: str,
                  parameters: Dict[str, Any],
                  success: bool = True,
                  error_message: Optional[str] = None,
                  duration_ms: Optional[float] = None,
                  outcome: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Log a run event and return the record"""
        record = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'event_type': event_type.value,
            'severity': severity.value,
            'command': command,
            'parameters': parameters,
            'success': success,
            'error_message': error_message,
            'duration_ms': duration_ms,
            'outcome': outcome or {},
        }
        message = json.dumps(record, default=str, sort_keys=True)

        if severity == RunSeverity.HIGH:
            self.run_logger.error(message)
        elif severity == RunSeverity.MEDIUM:
            self.run_logger.warning(message)
        else:
            self.run_logger.info(message)
        return record

    @contextmanager
    def track(self, command: str, parameters: Dict[str, Any]):
        """Time a computation and log its outcome

        Yields a dict the caller may fill with result details.
        """
        started = time.perf_counter()
        outcome: Dict[str, Any] = {}
        try:
            yield outcome
        except Exception as e:
            self.log_event(
                RunEventType.COMPUTATION, RunSeverity.HIGH, command, parameters,
                success=False, error_message=str(e),
                duration_ms=(time.perf_counter() - started) * 1000,
            )
            raise
        self.log_event(
            RunEventType.COMPUTATION, RunSeverity.LOW, command, parameters,
            duration_ms=(time.perf_counter() - started) * 1000,
            outcome=outcome,
        )
