"""Installed version of the package."""
from importlib.metadata import PackageNotFoundError, version

try:
    VERSION = version('splice-indices')
except PackageNotFoundError:  # pragma: no cover
    VERSION = '0.0.0.dev0'
