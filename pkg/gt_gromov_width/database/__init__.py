"""Verification run log storage for gt_gromov_width."""

from .models import DatabaseManager, VerificationRun

__all__ = ["DatabaseManager", "VerificationRun"]
