# pylint: disable=missing-module-docstring
__all__ = [
        'config',
        'dirs',
        'exceptions',
        'utils',
]
