import pandas as pd
from django.conf import settings
from joblib import Parallel, delayed

from happ.classes.logs.logs import Logs
from happ.classes.shape_inputs import ShapeInputs
from happ.combinat import sweeps
from happ.combinat.errors import CombinatError
from happ.configs.sweep_bounds import SweepBounds


class VerificationService:
    """
    Runs a verification suite over every subject up to a size bound. Subjects
    are fanned out with joblib and the reports come back in subject order.
    """

    @classmethod
    def _bound(cls, suite, n):
        if suite not in sweeps.SUITES:
            raise CombinatError(f"unknown suite {suite!r}; expected one of {', '.join(SweepBounds.suite_names())}")
        if n is None:
            n = SweepBounds.suite_bound(suite)
        if n < 1:
            raise CombinatError(f"n must be positive, got {n}")
        return ShapeInputs.check_size(n)

    @classmethod
    def _sweep(cls, suite, n):
        subjects = sweeps.subjects(suite, n)
        workers = getattr(settings, "HECKE_WORKERS", 1)
        return Parallel(n_jobs=workers)(
            delayed(sweeps.run_check)(suite, subject) for subject in subjects
        )

    @classmethod
    def run_suite(cls, suite: str, n=None):
        try:
            n = cls._bound(suite, n)
            reports = cls._sweep(suite, n)
            failures = [report.to_json() for report in reports if not report.ok]
            ok = not failures

            if ok:
                Logs.hecke_logger(f"Suite {suite} passed for n<={n} ({len(reports)} subjects)")
            else:
                Logs.hecke_technical_logger(f"suite_{suite}_failed_n_{n}: {failures[0]['witness']}")
            return {
                "status": "success",
                "message": "suite_passed" if ok else "suite_failed",
                "data": {
                    "suite": suite,
                    "n": n,
                    "ok": ok,
                    "subjects": len(reports),
                    "checked": sum(report.checked for report in reports),
                    "reports": [report.to_json() for report in reports],
                    "failures": failures,
                    "witness": failures[0]["witness"] if failures else None,
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"run_suite_failed_{suite}_n_{n}", exc_info=e)
            return {"status": "fail", "message": "run_suite_failed"}

    @classmethod
    def conjecture(cls, n=None):
        """
        Rank vectors of every class flip poset up to n. Passes when nothing
        crashes and, once n reaches its size, the known non-rank-symmetric
        shape shows up. Unimodality failures are listed, never asserted away.
        """
        try:
            n = cls._bound("conjecture", n)
            reports = cls._sweep("conjecture", n)
            failures = [report.to_json() for report in reports if not report.ok]
            rows = [row for report in reports for row in report.details.get("rank_vectors", [])]
            non_unimodal = [row for row in rows if not row["unimodal"]]
            non_symmetric = [row for row in rows if not row["symmetric"]]

            witness = sweeps.NON_RANK_SYMMETRIC_WITNESS
            witness_expected = n >= witness.size
            witness_found = any(row["shape"] == str(witness) for row in non_symmetric)
            ok = not failures and (witness_found or not witness_expected)

            Logs.hecke_logger(
                f"Conjecture sweep n<={n}: {len(rows)} classes, {len(non_unimodal)} non-unimodal, "
                f"{len(non_symmetric)} non-symmetric"
            )
            return {
                "status": "success",
                "message": "conjecture_swept" if ok else "conjecture_sweep_failed",
                "data": {
                    "n": n,
                    "ok": ok,
                    "classes": len(rows),
                    "rows": rows,
                    "non_unimodal": non_unimodal,
                    "non_symmetric_shapes": sorted({row["shape"] for row in non_symmetric}),
                    "witness_shape": str(witness),
                    "witness_reproduced": witness_found,
                    "failures": failures,
                    "witness": failures[0]["witness"] if failures else (
                        None if ok else {"shape": str(witness), "reason": "rank_symmetric_witness_missing"}
                    ),
                },
            }
        except CombinatError as e:
            return {"status": "error", "message": e.reason, "detail": str(e)}
        except Exception as e:
            Logs.hecke_technical_logger(f"conjecture_failed_n_{n}", exc_info=e)
            return {"status": "fail", "message": "conjecture_failed"}

    @staticmethod
    def to_tsv(rows, columns=None):
        """Rows of flat dicts as a tab-separated table with a header line."""
        frame = pd.DataFrame(rows, columns=columns)
        for column in frame.columns:
            frame[column] = frame[column].map(
                lambda value: ",".join(str(v) for v in value) if isinstance(value, (list, tuple)) else value
            )
        return frame.to_csv(sep="\t", index=False)

    @staticmethod
    def report_rows(reports):
        return [
            {
                "check": report["check"],
                "subject": report["subject"],
                "ok": report["ok"],
                "checked": report["checked"],
            }
            for report in reports
        ]
