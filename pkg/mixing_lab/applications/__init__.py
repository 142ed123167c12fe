# pylint: disable=missing-module-docstring
__all__ = [
        'lorenz',
        'zoo',
]
