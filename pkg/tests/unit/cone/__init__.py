# pylint: disable=missing-module-docstring
__all__ = [
        'test_chi',
        'test_cone',
        'test_contraction',
]
