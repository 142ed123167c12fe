# pylint: disable=missing-module-docstring
__all__ = [
        'test_disintegration',
        'test_flow_correlation',
        'test_skew_map',
]
