#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')

requirements = [
    'PyYAML',
]

test_requirements = [
    'pytest',
    'hypothesis',
]


# we can't just "import derangelab" to get at derangelab.__version__
# since it might have unmet dependencies at this point. Extract it
# directly from the file.
def find_version(filename):
    import re
    _version_re = re.compile(r'__version__ = "(.*)"')
    for line in open(filename):
        version_match = _version_re.match(line)
        if version_match:
            return version_match.group(1)

setup(
    name='derange-lab',
    version=find_version('derangelab/__init__.py'),
    description='Permutation statistics, sign-reversing involutions on '
    'derangements and brute force certification of signed generating '
    'function identities',
    long_description=readme + '\n\n' + history,
    packages=[
        'derangelab',
    ],
    package_dir={'derangelab':
                 'derangelab'},
    include_package_data=True,
    install_requires=requirements,
    python_requires='>=3.8',
    license="BSD",
    zip_safe=False,
    keywords='combinatorics permutations derangements',
    entry_points={
        'console_scripts': [
            'derange-lab = derangelab.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements
)
