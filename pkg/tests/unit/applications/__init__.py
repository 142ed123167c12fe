# pylint: disable=missing-module-docstring
__all__ = [
        'test_lorenz',
        'test_zoo',
]
