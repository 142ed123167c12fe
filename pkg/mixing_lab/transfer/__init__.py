# pylint: disable=missing-module-docstring
__all__ = [
        'dolgopyat',
        'grid',
        'lasota_yorke',
        'operators',
        'spectrum',
]
