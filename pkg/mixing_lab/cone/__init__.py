# pylint: disable=missing-module-docstring
__all__ = [
        'chi',
        'cone',
        'contraction',
]
