# pylint: disable=missing-module-docstring
__all__ = [
        'disintegration',
        'flow_correlation',
        'skew_map',
]
