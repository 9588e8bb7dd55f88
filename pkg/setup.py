#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pathlib
from setuptools import setup, find_packages

# The directory containing this file
HERE = pathlib.Path(__file__).parent

# Text of the README file
README = (HERE / "README.md").read_text() if (HERE / "README.md").exists() else ""

setup(
    name="ordinal_patterns",
    version="v0.1.0",
    description="Ordinal pattern representations, encodings and time-series analysis for Python",
    long_description=README,
    long_description_content_type="text/markdown",
    author="RLSGarcia",
    author_email="RLSGarcia@icloud.com",
    packages=find_packages(exclude=["tests*", "docs*", "examples*"]),
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20.0",
        "pydantic>=1.10.0",
        "scipy>=1.5.0",
        "pandas>=1.3.0",
    ],
    extras_require={
        "test": ["pytest", "pytest-cov", "hypothesis"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    entry_points={
        "console_scripts": [
            "ordinal-patterns=ordinal_patterns.cli.main:main",
        ],
    },
)
