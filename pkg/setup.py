#!/usr/bin/env python

from pathlib import Path

from setuptools import find_packages, setup

# read the contents of the README file
readme_path = Path(__file__).resolve().parent / "README.rst"
with open(readme_path, encoding='utf-8') as f:
    long_description = f.read()

base_extras = [
    'click>=6.7',
    'more-itertools>=8.6.0',
    'networkx>=2.6',
    'numpy>=1.17',
    'pandas>=1.0.3',
    'scipy>=1.4.0',
]
parallel_extras = ['dask[bag]>=2.19.0']

setup(
    name="splice-indices",
    description="Szeged, PI and eccentric connectivity indices of splice graphs, "
                "direct and by decomposition formulas",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    entry_points={
        'console_scripts': ['splice-indices=splice_indices.cli:cli']},
    license="LGPLv3",
    install_requires=base_extras,
    extras_require={
        'parallel': parallel_extras,
        'all': parallel_extras,
        'docs': ['sphinx', 'sphinx-bluebrain-theme'],
    },
    python_requires='>=3.8',
    packages=find_packages(exclude=['tests', 'functional_tests']),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    use_scm_version={'fallback_version': '0.1.0'},
    setup_requires=['setuptools_scm'],
)
