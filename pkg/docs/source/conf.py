# -*- coding: utf-8 -*-
# pylint: skip-file
#
# Sphinx configuration of droop-snr.
#
import sys
from os import path
import sphinx_rtd_theme

abspath = path.abspath(path.dirname(__file__))
sys.path.append(path.join(abspath, '../../'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    "sphinx.ext.napoleon",
    'sphinx.ext.graphviz'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'droop-snr'
copyright = u'2026, droop-snr developers'
author = u'droop-snr developers'

release = u'0.1.0'
version = release[:3]

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'DroopSnrdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'DroopSnr.tex', u'droop-snr Documentation',
     u'droop-snr developers', 'manual'),
]
