"""
Setup of platjones python codebase
"""
from setuptools import setup

requirements = [
    'numpy',
    'scipy',
    'pyyaml',
    'autolab-core',
    'ruamel.yaml<0.18',  # autolab-core's YamlConfig uses ruamel.yaml.load(), removed in 0.18
]

setup(name='platjones',
    version='0.1.0',
    description='Colored Jones invariants of plat-closed braids and simulation of their quantum approximation',
    package_dir = {'': '.'},
    packages=['platjones', 'platjones.algebra', 'platjones.braids', 'platjones.circuits'],
    package_data={'platjones': ['config.yaml']},
    install_requires=requirements,
    test_suite='test',
    entry_points={
        'console_scripts': ['platjones = platjones.cli:main']
    }
)
