# -*- coding: utf-8 -*-
#
# Sphinx configuration for the pyzeta documentation.
#

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import pyzeta


# -- Project information -----------------------------------------------------

project = u'pyzeta'
copyright = u'Copyright (C) 2026 The pyzeta developers'
author = u'The pyzeta developers'

version = pyzeta.__version__
release = version


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
    'm2r2',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
language = None
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# Docstrings use sphinx field lists
autodoc_member_order = 'bysource'


# -- Output ------------------------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'pyzetadoc'

latex_elements = {}
latex_documents = [
    (master_doc, 'pyzeta.tex', u'pyzeta Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, project, u'pyzeta Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, project, u'pyzeta Documentation', author, project,
     pyzeta.__doc__ or 'Numerical laboratory for the Riemann zeta function', 'Mathematics'),
]


# -- API pages ---------------------------------------------------------------

def run_apidoc(_):
    argv = [
        "-f",           # Force
        "-T",           # No TOC
        "-e",           # Each module on its own page
        "-M",           # Module first
        "-o", "api/",
        "../pyzeta",
    ]

    from sphinx.ext import apidoc
    apidoc.main(argv)


def setup(app):
    app.connect('builder-inited', run_apidoc)
