import uuid
from loguru import logger


class VerificationSession:
    """
    Context manager grouping the check reports of one run.

    Use it like this:
        ```
            with VerificationSession("verify-tr") as s:
                s.extend(verify_tr_suite(triple))
                print(s.reports)
        ```
    The session id only appears in logs, never in reports.
    """

    def __init__(self, label: str = "run", session_id: str = None):
        self.label = label
        self.session_id = session_id if session_id else str(uuid.uuid4())
        self.reports = []

    def extend(self, reports) -> None:
        self.reports.extend(reports)

    def __enter__(self):
        logger.info(f"Entering session {self.label}: {self.session_id}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        logger.info(f"Exiting session {self.label}: {self.session_id} ({len(self.reports)} reports)")
        if exc_type:
            logger.error(f"An exception occurred: {exc_val}")
        # propagate
        return False
