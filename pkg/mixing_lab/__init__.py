# pylint: disable=missing-module-docstring
__all__ = [
        'applications',
        'cone',
        'dynamics',
        'general',
        'lab_main',
        'run_config',
        'skew',
        'suspension',
        'transfer',
        'uni',
]
