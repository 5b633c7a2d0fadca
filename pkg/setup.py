# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import io


def requirements():
    with open('requirements.txt', 'r') as fileobj:
        return [line.strip() for line in fileobj if line.strip()]


def long_description():
    with io.open('README.rst', 'r', encoding='utf8') as fileobj:
        return fileobj.read()


setup(
    name='factorable',
    version='0.3.0',
    license='MIT',
    description='factorable monoids, Visy complex homology and Garside normal forms',
    long_description=long_description(),
    packages=find_packages(exclude=['ut', 'demo']),
    install_requires=requirements(),
    extras_require={
        'test': ['pytest', 'sympy'],
    },
    entry_points={
        'console_scripts': ['factorable=factorable.cli:main'],
    },
)
