# pylint: disable=missing-module-docstring
__all__ = [
        'test_ledger',
        'test_scan',
]
