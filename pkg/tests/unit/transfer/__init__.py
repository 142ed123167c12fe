# pylint: disable=missing-module-docstring
__all__ = [
        'test_dolgopyat',
        'test_grid',
        'test_lasota_yorke',
        'test_operators',
        'test_spectrum',
]
