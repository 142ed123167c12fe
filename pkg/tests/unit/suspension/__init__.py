# pylint: disable=missing-module-docstring
__all__ = [
        'test_correlation',
        'test_laplace',
        'test_observables',
        'test_semiflow',
        'test_system',
        'test_visits',
]
