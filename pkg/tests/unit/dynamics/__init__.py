# pylint: disable=missing-module-docstring
__all__ = [
        'test_conditions',
        'test_maps',
        'test_polynomial_roof',
        'test_words',
]
