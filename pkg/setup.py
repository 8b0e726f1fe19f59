"""
cind
====

cind computes large induced 2-regular subgraphs of cubic graphs:
greedy cycle removal with a chordality guarantee, exact
branch-and-bound oracles and a constructive solver that finds
5n/8 + 3/4 vertices in connected cubic 4-chordal graphs, together
with the block structure of those graphs.
"""

from setuptools import setup, find_packages

__author__ = 'cind developers'
__description__ = "Induced 2-regular subgraphs of cubic graphs"
__license__ = 'BSD (3-clause)'
__version__ = '0.1.0'
__classifiers__ = [
  'Intended Audience :: Science/Research',
  'License :: OSI Approved :: BSD License',
  'Programming Language :: Python :: 3 :: Only',
  'Topic :: Scientific/Engineering :: Mathematics'
]


def check_dependencies():
    """
    Check for system level dependencies
    """
    pass


def get_required_packages():
    """
    Return required packages

    Plus any version tests and warnings
    """
    # lineterminator in DataFrame.to_csv needs pandas 1.5
    install_requires = ['pandas >= 1.5.0',
                        'numpy >= 1.17',
                        'networkx >= 2.6']
    return install_requires


def get_extra_packages():
    """
    Return extra packages for the test suite
    """
    return {'test': ['pytest', 'pytest-cov', 'hypothesis']}


if __name__ == '__main__':
    check_dependencies()

    setup(name='cind',
          maintainer=__author__,
          description=__description__,
          long_description=__doc__,
          license=__license__,
          version=__version__,
          python_requires='>=3.10',
          install_requires=get_required_packages(),
          extras_require=get_extra_packages(),
          packages=find_packages(exclude=['examples', 'examples.*']),
          entry_points={
              'console_scripts': ['cind = cind.cli:main'],
          },
          classifiers=__classifiers__,
          zip_safe=False)
