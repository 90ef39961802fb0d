# -*- coding: utf-8 -*-

# version string
__version__ = '1.0.0'

# README
with open('README.rst', encoding='utf-8') as file:
    long_description = file.read()

# setup attributes
attrs = dict(
    name='pymookit',
    version=__version__,
    description='Componentising toolchain for MiniOO programs.',
    long_description=long_description,
    # py_modules
    packages=[
        'mookit',
        'mookit.const',
        'mookit.corekit',
        'mookit.distrib',
        'mookit.dumpkit',
        'mookit.foundation',
        'mookit.interface',
        'mookit.lang',
        'mookit.runtime',
        'mookit.utilities',
    ],
    # scripts
    # ext_modules
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Software Development :: Compilers',
        'Topic :: Software Development :: Interpreters',
        'Topic :: System :: Distributed Computing',
        'Typing :: Typed',
    ],
    license='BSD 3-Clause License',
    keywords=[
        'program-transformation',
        'distributed-objects',
        'interpreter',
    ],
    platforms=[
        'any'
    ],
    package_data={
        '': [
            'README.rst',
        ],
    },
    install_requires=[
        'dictdumper~=0.8.0',        # for formatted output
        'chardet',                  # for bytes decode
        'aenum',                    # for const types
        'tbtrim>=0.2.1',            # for refined exceptions
        'pyparsing>=3.0',           # for source parsing
    ],
    entry_points={
        'console_scripts': [
            'mookit-cli = mookit.__main__:main',
            'mookit-node = mookit.distrib.__main__:main',
        ]
    },
    extras_require={
        'all': [
            'emoji',
            'pytest',
        ],
        # for CLI display
        'cli': ['emoji'],
        # for developers
        'test': ['pytest'],
    },
)

try:
    from setuptools import setup

    attrs.update(dict(
        include_package_data=True,  # type: ignore
        long_description_content_type='text/x-rst',
        python_requires='>=3.9',
        zip_safe=True,  # type: ignore
    ))
except ImportError:
    from distutils.core import setup  # pylint: disable=deprecated-module

# set-up script for pip distribution
setup(**attrs)
