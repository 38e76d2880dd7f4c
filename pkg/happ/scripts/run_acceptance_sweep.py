#!/usr/bin/env python3

import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import django

# --------------------------------------------------
# Force project root onto PYTHONPATH
# --------------------------------------------------
BASE_DIR = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(BASE_DIR))

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "heckeproject.settings")
django.setup()

from happ.classes.count_service import CountService
from happ.classes.logs.logs import Logs
from happ.classes.verification_service import VerificationService
from happ.configs.sweep_bounds import SweepBounds


def now():
    return datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S")


def run_suites():
    """Every suite at its default bound; returns the names that did not pass."""
    failed = []
    for suite in SweepBounds.suite_names():
        if suite == "conjecture":
            result = VerificationService.conjecture()
        else:
            result = VerificationService.run_suite(suite)
        ok = result["status"] == "success" and result["data"]["ok"]
        print(f"{'ok' if ok else 'FAILED'}\t{suite}\t{result['message']}")
        if not ok:
            failed.append(suite)

    counts = CountService.table()
    ok = counts["status"] == "success" and counts["data"]["ok"]
    print(f"{'ok' if ok else 'FAILED'}\tcounts\t{counts['message']}")
    if not ok:
        failed.append("counts")
    return failed


# --------------------------------------------------
# Main
# --------------------------------------------------
def main():
    Logs.hecke_logger(f"Acceptance sweep started at {now()}")
    print(f"Acceptance sweep started at {now()}")

    try:
        failed = run_suites()
        Logs.hecke_logger(f"Acceptance sweep finished at {now()}; failed: {failed or 'none'}")
        print(f"Acceptance sweep finished at {now()}")
        return 1 if failed else 0

    except Exception as e:
        Logs.hecke_technical_logger("acceptance_sweep_failed", exc_info=e)
        print("Acceptance sweep failed")
        return 1


if __name__ == "__main__":
    sys.exit(main())
