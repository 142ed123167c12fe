# pylint: disable=missing-module-docstring
__all__ = [
        'test_lab_main',
        'test_run_config',
]
