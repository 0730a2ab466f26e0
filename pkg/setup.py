import os
from setuptools import find_packages, setup

# Single source of truth for version
version_ns = {}
with open(os.path.join("eckart_nu", "version.py")) as f:
    exec(f.read(), version_ns)
version = version_ns['__version__']

with open('README.rst') as f:
    long_description = f.read()

setup(
    name="eckart-nu",
    description="Bound states of the D-dimensional Eckart potential under centrifugal "
                "approximations",
    long_description=long_description,
    long_description_content_type='text/x-rst',
    version=version,
    packages=find_packages(exclude=["tests", "tests.*"]),
    entry_points='''
    [console_scripts]
    eckart-nu=eckart_nu.main:cli
    ''',
    install_requires=[
        "Click>=7.0",
        "numpy>=1.17",
        "packaging>=20.1",
        "scipy>=1.4",
    ],
    python_requires=">=3.8",
    license='Apache 2.0',
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX',
        'Operating System :: MacOS :: MacOS X',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
