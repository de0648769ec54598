from typing import Callable
from loguru import logger


class Check:
    """
    An executable statement about a category (Check).

    Attributes:
        check_id (str): Identifier used in reports, e.g. ``RTR2``.
        family (str): Suite the check belongs to.
        description (str): What the check verifies.
        func (callable): The function this check wraps; takes a VerificationContext.
        arguments (list): (name, annotation) pairs of the wrapped function.
        session_id (str): Optional id of the session the check runs under.
    """
    def __init__(self,
                 check_id: str,
                 family: str,
                 description: str,
                 func: Callable,
                 arguments: list,
                 session_id: str = None):
        self.check_id = check_id
        self.family = family
        self.description = description
        self.func = func
        self.arguments = arguments
        self.session_id = session_id

    def to_string(self) -> str:
        """
        Return a string representation of the check,
        """
        args_str = ", ".join(f"{name}: {annot}" for name, annot in self.arguments)
        return (
            f"Check: {self.check_id},"
            f" Family: {self.family},"
            f" Description: {self.description},"
            f" Arguments: {args_str}"
        )

    def __call__(self, context):
        """
        Run the wrapped function on a verification context.
        """
        logger.debug(f"calling check {self.check_id} on {context.label} (session `{self.session_id}`)")
        return self.func(context)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"<Check {self.check_id}: {self.description[:50]}{'...' if len(self.description) > 50 else ''}>"
