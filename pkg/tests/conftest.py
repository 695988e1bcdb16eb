"""Shared pytest configuration: slow tables only run with --long."""

import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False, help="Run slow enumeration tests (E7, E8)")


def pytest_configure(config):
    config.addinivalue_line("markers", "long: slow test, skipped unless --long is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip_long = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip_long)
