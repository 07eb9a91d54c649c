import os

from setuptools import setup
from mypyc.build import mypycify

_NATIVE_MODULES = ["ll_qlg/qlg/simulator.py"] if os.environ.get("LL_QLG_MYPYC") == "1" else []

setup(ext_modules=mypycify(_NATIVE_MODULES) if _NATIVE_MODULES else [])
