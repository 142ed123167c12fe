# pylint: disable=missing-module-docstring
__all__ = [
        'correlation',
        'laplace',
        'observables',
        'semiflow',
        'system',
        'visits',
]
