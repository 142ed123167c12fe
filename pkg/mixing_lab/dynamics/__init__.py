# pylint: disable=missing-module-docstring
__all__ = [
        'conditions',
        'full_branch',
        'luroth',
        'map_meta',
        'polynomial_roof',
        'roof_meta',
        'words',
]
