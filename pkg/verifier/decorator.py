import inspect
from .base import Check


def check(check_id: str = None, family: str = None, description: str = None):
    def wrapper(func):
        """
        A decorator that creates a Check instance from the given function.
        """
        signature = inspect.signature(func)

        arguments = []
        for param in signature.parameters.values():
            annotation_name = (
                param.annotation.__name__
                if hasattr(param.annotation, '__name__')
                else str(param.annotation)
            )
            arguments.append((param.name, annotation_name))

        check_description = description or (func.__doc__ or "").strip() or "No description provided."
        return Check(
            check_id=check_id or func.__name__.upper(),
            family=family or func.__module__.rsplit(".", 1)[-1],
            description=check_description,
            func=func,
            arguments=arguments,
        )
    return wrapper
