import os
import traceback
from datetime import datetime, timezone

from django.conf import settings


class Logs:
    """
    Logging utility: appends to hourly text files under HECKE_LOG_DIR.
    General messages go to YYYY-MM-DD-HH.txt, failures to YYYY-MM-DD-HH-tech.txt.
    """

    @staticmethod
    def _log_dir():
        return getattr(settings, "HECKE_LOG_DIR", "./log_files")

    @staticmethod
    def _write(suffix, text, exc_info=None):
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%d-%H")
        log_dir = Logs._log_dir()
        file_path = os.path.join(log_dir, stamp + suffix)

        try:
            os.makedirs(log_dir, exist_ok=True)

            with open(file_path, 'a') as file:
                file.write(str(text) + '\n\n')

                if exc_info:
                    frames = traceback.extract_tb(exc_info.__traceback__)
                    if frames:
                        filename, line, func, _ = frames[-1]
                        file.write(
                            f"Error in file: {filename}, line: {line}, "
                            f"in {func} - {str(exc_info)}\n"
                        )
                    else:
                        file.write(f"Error: {str(exc_info)}\n")

            return {"message": "Log entry added successfully."}

        except Exception as e:
            return {"error": f"Logging error occurred: {str(e)}"}

    @staticmethod
    def hecke_technical_logger(text, exc_info=None):
        """Log failures and exceptions."""
        return Logs._write("-tech.txt", text, exc_info)

    @staticmethod
    def hecke_logger(text, exc_info=None):
        """Log general messages."""
        return Logs._write(".txt", text, exc_info)
