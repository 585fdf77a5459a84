"""Run log of verification suites."""

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Dict, List, Optional

from sqlalchemy import Boolean, Column, DateTime, Integer, MetaData, String, Table, Text, create_engine, text

from ..config import Config


@dataclass
class VerificationRun:
    """One suite outcome as stored in the run log."""
    spectrum: str
    suite: str
    trials: int
    seed: int
    passed: bool
    message: str


class DatabaseManager:
    """Manages the verification_runs table."""

    def __init__(self, url: Optional[str] = None):
        """
        Initialize database manager.

        Args:
            url: SQLAlchemy URL (default `Config.DATABASE_URL`)
        """
        self.engine = create_engine(url or Config.DATABASE_URL)
        self.metadata = MetaData()
        self.runs = Table(
            "verification_runs",
            self.metadata,
            Column("id", Integer, primary_key=True, autoincrement=True),
            Column("run_at", DateTime, nullable=False),
            Column("spectrum", String(255), nullable=False),
            Column("suite", String(64), nullable=False),
            Column("trials", Integer, nullable=False),
            Column("seed", Integer, nullable=False),
            Column("passed", Boolean, nullable=False),
            Column("message", Text),
        )
        self.metadata.create_all(self.engine)

    def log_verification_run(self, run: VerificationRun) -> int:
        """Store one suite result and return its id."""
        with self.engine.connect() as conn:
            result = conn.execute(self.runs.insert().values(
                run_at=datetime.now(timezone.utc),
                spectrum=run.spectrum,
                suite=run.suite,
                trials=run.trials,
                seed=run.seed,
                passed=run.passed,
                message=run.message,
            ))
            conn.commit()
            return result.inserted_primary_key[0]

    def get_run_log(self, limit: int = 100) -> List[Dict]:
        """Most recent runs first."""
        with self.engine.connect() as conn:
            result = conn.execute(text("""
                SELECT id, run_at, spectrum, suite, trials, seed, passed, message
                FROM verification_runs
                ORDER BY id DESC
                LIMIT :limit
            """), {"limit": limit})
            return [dict(row._mapping) for row in result]

    def clear_run_log(self) -> int:
        """Delete every stored run; returns the number removed."""
        with self.engine.connect() as conn:
            result = conn.execute(self.runs.delete())
            conn.commit()
            return result.rowcount
