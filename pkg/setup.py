"""
betti-bounds packaging
"""

from pathlib import Path

from setuptools import find_packages, setup

requirements = [
    line.split('#')[0].strip()
    for line in Path(__file__).with_name('requirements.txt').read_text(encoding='utf-8').splitlines()
    if line.strip() and not line.startswith('#') and not line.startswith(('pytest', 'hypothesis'))
]

setup(
    name='betti-bounds',
    version='1.0.0',
    description='Lower bounds on Betti numbers of moduli stacks of stable curves',
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.10',
    install_requires=requirements,
    extras_require={'test': ['pytest==7.4.2', 'pytest-cov==4.1.0', 'hypothesis>=6.88']},
    entry_points={'console_scripts': ['betti-bounds=betti_bounds.cli:run']},
)
