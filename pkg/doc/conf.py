# cind documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

CUR_PATH = os.path.dirname(os.path.abspath(__file__))
PROJECT_PATH = os.path.abspath(CUR_PATH + '/../')
sys.path.insert(0, CUR_PATH)
sys.path.insert(0, PROJECT_PATH)

# -- General configuration ------------------------------------------------

needs_sphinx = '2.2.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
    'sphinx.ext.autosectionlabel',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'cind'
copyright = '2026, cind developers'

try:
    import cind
    version = cind.__version__
except ImportError:
    version = 'unknown'

release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'
highlight_language = 'python3'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_sidebars = {
    '**': [],
    'api': ['localtoc.html']
}
htmlhelp_basename = 'cinddoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'cind', 'cind Documentation',
     ['cind developers'], 1)
]

# -- Extension configuration ----------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

autodoc_member_order = 'bysource'
autosummary_generate = True
autosectionlabel_prefix_document = True
autosectionlabel_maxdepth = 2

numpydoc_show_class_members = False
numpydoc_class_members_toctree = False
