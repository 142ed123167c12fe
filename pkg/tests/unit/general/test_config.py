#!/usr/bin/env python3
"""
Tests the mixing_lab.general.config functionality.

Per [pytest](https://docs.pytest.org/en/reorganize-docs/new-docs/user/naming_conventions.html),
all tiles, classes, and methods will be prefaced with `test_/Test` to comply
with auto-discovery (others may exist, but will not be part of test suite
directly).

Module Attributes:
  TEST_CONFIG_DIR (str): The dir holding the mock confs for these tests.

(C) Copyright 2026 The mixing_lab Authors.  All Rights Reserved Worldwide.
"""
import configparser
import logging
import os.path

import pytest

from mixing_lab.general import config
from mixing_lab.general import dirs
from mixing_lab.general.exceptions import *   # pylint: disable=wildcard-import, unused-wildcard-import



TEST_CONFIG_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)),
        'test_config')



def test_read_conf_file():
    """
    Tests that the `read_conf_file()` will correctly read a file, checking a
    couple values, and that missing or broken files raise the config error.
    """
    parser = config.read_conf_file('mock_config.conf', TEST_CONFIG_DIR)
    assert parser['test-section']['test key str'] == 'test-val-str'
    assert parser.getint('test-section', 'test key int') == 123

    with pytest.raises(LabConfigError) as ex:
        config.read_conf_file('not_a_file.conf', TEST_CONFIG_DIR)
    assert 'Config file not found' in str(ex.value)

    with pytest.raises(LabConfigError) as ex:
        config.read_conf_file('mock_config_bad.conf', TEST_CONFIG_DIR)
    assert 'Config file unreadable' in str(ex.value)

    parser = config.read_conf_file('models.conf')
    assert 'doubling-quadratic' in parser.sections()



def test_cast_var():
    """
    Tests `cast_var()` for all `CastType`, so by extention tests that enum also.
    """
    good_int_str = '5'
    good_float_str = '3.14'
    good_str = 'test str'
    good_int = int(good_int_str)
    good_float = float(good_float_str)
    bad_int_str = 'five'
    bad_float_str = 'pi'

    assert good_int == config.cast_var(good_int_str, config.CastType.INT)
    assert good_float == config.cast_var(good_float_str, config.CastType.FLOAT)
    assert good_str == config.cast_var(good_str, config.CastType.STRING)
    assert config.cast_var('Yes', config.CastType.BOOL) is True
    assert config.cast_var(' off ', config.CastType.BOOL) is False

    with pytest.raises(TypeError) as ex:
        config.cast_var(good_int, 'invalid_cast_type')
    assert 'Cast failed -- unsupported type.' in str(ex.value)

    with pytest.raises(ValueError) as ex:
        config.cast_var(bad_int_str, config.CastType.INT)
    assert "invalid literal for int() with base 10: 'five'" in str(ex.value)

    with pytest.raises(ValueError) as ex:
        config.cast_var(bad_float_str, config.CastType.FLOAT)
    assert "could not convert string to float: 'pi'" in str(ex.value)

    with pytest.raises(ValueError) as ex:
        config.cast_var('maybe', config.CastType.BOOL)
    assert 'Not a boolean' in str(ex.value)

    assert bad_int_str == config.cast_var(bad_int_str, config.CastType.INT,
            True)



def test_parse_list_from_conf_string():
    """
    Tests `parse_list_from_conf_string()`.
    """
    conf_list_strs = ['one', 'two', 'three']
    conf_str_simple = 'one, two, three'
    conf_str_newlines = 'one,\r\ntwo,  \r\n\r\n  three'
    conf_str_quotes = 'one, "two", \'three\''
    conf_str_delim = 'one | two | three'
    delim_char = '|'

    conf_list_ints = [1, 2, 3]
    conf_str_ints = '1, 2, 3'
    conf_str_ints_mixed = '1, 1.5, 2, two-and-a-third, 3'
    conf_list_floats = [1.0, 2.00, 3.000]
    conf_str_floats = '1.0, 2.00, 3.000'

    assert [] == config.parse_list_from_conf_string('', config.CastType.STRING)
    assert conf_list_strs == config.parse_list_from_conf_string(
            conf_str_simple, config.CastType.STRING)
    assert conf_list_strs == config.parse_list_from_conf_string(
            conf_str_newlines, config.CastType.STRING)
    assert conf_list_strs != config.parse_list_from_conf_string(
            conf_str_quotes, config.CastType.STRING)
    assert conf_list_strs == config.parse_list_from_conf_string(
            conf_str_quotes, config.CastType.STRING, strip_quotes=True)
    assert conf_list_strs == config.parse_list_from_conf_string(
            conf_str_delim, config.CastType.STRING, delim_char)

    assert conf_list_ints == config.parse_list_from_conf_string(
            conf_str_ints, config.CastType.INT)
    assert conf_list_ints == config.parse_list_from_conf_string(
            conf_str_ints_mixed, config.CastType.INT)
    assert conf_list_floats == config.parse_list_from_conf_string(
            conf_str_floats, config.CastType.FLOAT)



def test_get_conf_value():
    """
    Tests `get_conf_value()`.
    """
    conf_cp = config.read_conf_file('mock_config.conf', TEST_CONFIG_DIR)
    section = 'test-section'

    assert config.get_conf_value(conf_cp, section, 'test key int',
            config.CastType.INT) == 123
    assert config.get_conf_value(conf_cp, section, 'test key float',
            config.CastType.FLOAT, positive=True) == 2.5
    assert config.get_conf_value(conf_cp, section, 'test key bool',
            config.CastType.BOOL) is True
    assert config.get_conf_value(conf_cp, section, 'missing key',
            config.CastType.INT, 7) == 7
    assert config.get_conf_value(conf_cp, 'missing-section', 'test key int',
            config.CastType.INT, 8) == 8

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_value(conf_cp, section, 'missing key',
                config.CastType.INT)
    assert 'Missing config key' in str(ex.value)

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_value(conf_cp, section, 'test key bad int',
                config.CastType.INT)
    assert 'Invalid value' in str(ex.value)

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_value(conf_cp, section, 'test key negative',
                config.CastType.INT, positive=True)
    assert 'must be positive' in str(ex.value)



def test_get_conf_list():
    """
    Tests `get_conf_list()`.
    """
    conf_cp = config.read_conf_file('mock_config.conf', TEST_CONFIG_DIR)
    section = 'test-section'

    assert config.get_conf_list(conf_cp, section, 'test key list',
            config.CastType.INT, positive=True) == [1, 2, 3]
    assert config.get_conf_list(conf_cp, section, 'test key neg list',
            config.CastType.FLOAT) == [1.0, -2.0]
    assert config.get_conf_list(conf_cp, section, 'missing key',
            config.CastType.INT, (4, 5)) == [4, 5]

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_list(conf_cp, section, 'missing key',
                config.CastType.INT)
    assert 'Missing config key' in str(ex.value)

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_list(conf_cp, section, 'test key empty list',
                config.CastType.INT)
    assert 'Empty list' in str(ex.value)

    with pytest.raises(LabConfigError) as ex:
        config.get_conf_list(conf_cp, section, 'test key neg list',
                config.CastType.INT, positive=True)
    assert 'must be all positive' in str(ex.value)



def test_level_filter(caplog, capsys):
    """
    Tests `LevelFilter` entirely.

    Note that caplog does NOT respect filters added to handlers, so results in
    records/record_tuples must then also be checked against capsys to confirm
    logging actually went through or did not as expected (stderr used for all as
    default).
    """
    filter_above_info = config.LevelFilter(min_exc_level=logging.INFO)
    filter_above_info_upto_warning = config.LevelFilter('info', 30)
    filter_upto_warning = config.LevelFilter(max_inc_level='WARNING')

    handlers = {}
    loggers = {}
    test_levels = ['INFO', 'WARNING', 'ERROR']
    for level in test_levels:
        handlers[level] = logging.StreamHandler()
        handlers[level].setLevel(level)

        loggers[level] = logging.getLogger(f'test logger {level.lower()}')
        loggers[level].addHandler(handlers[level])
        loggers[level].setLevel(level)

    caplog.set_level(logging.DEBUG)

    caplog.clear()
    for level in test_levels:
        loggers[level].info(f'1. test, msg info, log {level}')
    assert caplog.record_tuples == [
            ('test logger info', logging.INFO, '1. test, msg info, log INFO'),
    ]
    assert '1. test, msg info, log INFO' in capsys.readouterr().err

    caplog.clear()
    handlers['INFO'].addFilter(filter_above_info)
    for level in test_levels:
        loggers[level].info(f'2. test, msg info, log {level}')
        loggers[level].warning(f'2. test, msg warning, log {level}')
    stderr = capsys.readouterr().err
    assert '2. test, msg info, log INFO' not in stderr
    assert '2. test, msg warning, log INFO' in stderr
    assert '2. test, msg warning, log WARNING' in stderr

    handlers['INFO'].removeFilter(filter_above_info)
    caplog.clear()
    handlers['INFO'].addFilter(filter_above_info_upto_warning)
    handlers['WARNING'].addFilter(filter_upto_warning)
    for level in test_levels:
        loggers[level].info(f'3. test, msg info, log {level}')
        loggers[level].warning(f'3. test, msg warning, log {level}')
        loggers[level].error(f'3. test, msg error, log {level}')
    assert len(caplog.record_tuples) == 6
    stderr = capsys.readouterr().err
    assert '3. test, msg info, log INFO' not in stderr
    assert '3. test, msg warning, log INFO' in stderr
    assert '3. test, msg error, log INFO' not in stderr
    assert '3. test, msg warning, log WARNING' in stderr
    assert '3. test, msg error, log WARNING' not in stderr
    assert '3. test, msg error, log ERROR' in stderr

    for level in test_levels:
        loggers[level].removeHandler(handlers[level])



def test_find_existing_handler_from_config(monkeypatch):
    """
    Tests `find_existing_handler_from_config()`.
    """
    def mock_get_conf_path():
        """
        Replaces the conf path with the one for mock confs in unit tests.
        """
        return TEST_CONFIG_DIR

    monkeypatch.setattr(dirs, 'get_conf_path', mock_get_conf_path)

    config.init_logger()

    logger_cp = configparser.RawConfigParser()
    logger_cp.read(os.path.join(TEST_CONFIG_DIR, 'logger.conf'))

    assert config.find_existing_handler_from_config(
            logger_cp, 'stdoutHandler') is not None
    assert config.find_existing_handler_from_config(
            logger_cp, 'stderrHandler') is not None
    assert config.find_existing_handler_from_config(
            logger_cp, 'disabledHandler') is not None

    mismatch_logger_cp = configparser.RawConfigParser()
    mismatch_logger_cp.read(os.path.join(TEST_CONFIG_DIR,
            'logger_mismatch.conf'))

    assert config.find_existing_handler_from_config(
            mismatch_logger_cp, 'stdoutHandler') is None
    assert config.find_existing_handler_from_config(
            mismatch_logger_cp, 'stderrHandler') is None
    assert config.find_existing_handler_from_config(
            mismatch_logger_cp, 'nonexistentHandler') is None



def test_init_logger(monkeypatch):
    """
    Tests `init_logger()`.
    """
    def mock_get_conf_path():
        """
        Replaces the conf path with the one for mock confs in unit tests.
        """
        return TEST_CONFIG_DIR

    monkeypatch.setattr(dirs, 'get_conf_path', mock_get_conf_path)

    config.init_logger()

    logger_cp = configparser.RawConfigParser()
    logger_cp.read(os.path.join(TEST_CONFIG_DIR, 'logger.conf'))

    stdout_handler = config.find_existing_handler_from_config(
            logger_cp, 'stdoutHandler')
    assert stdout_handler is not None
    assert stdout_handler.filters[0]._max_inc_levelno \
            == logging.INFO                   # pylint: disable=protected-access
    disabled_handler = config.find_existing_handler_from_config(
            logger_cp, 'disabledHandler')
    assert disabled_handler.level == 99

    root_logger = logging.getLogger()

    def find_by_format(handler_name):
        """
        Finds a root handler by its format alone, since level overrides stop
        `find_existing_handler_from_config()` from matching.  Formats are
        unique in the mock conf.
        """
        h_conf = logger_cp[f'handler_{handler_name}']
        h_conf_fmt = logger_cp[ \
                f'formatter_{h_conf["formatter"]}']['format'].strip()
        for h_existing in root_logger.handlers:
            if h_existing.formatter._fmt \
                    == h_conf_fmt:            # pylint: disable=protected-access
                return h_existing
        return None

    config.init_logger('VeRBoSe')
    assert root_logger.level == logging.NOTSET
    assert find_by_format('stdoutHandler').level == logging.NOTSET
    assert find_by_format('stderrHandler').level == logging.WARNING

    config.init_logger(40)
    assert root_logger.level == 40
    assert find_by_format('stdoutHandler').level == logging.INFO
    assert find_by_format('stderrHandler').level == 40
    assert find_by_format('disabledHandler').level == 99
