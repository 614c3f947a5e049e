# -*- coding: utf-8 -*-
#
# mongetools documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.  All configuration values have a default; values that
# are commented out serve to show the default.

import sys
import os

# The package lives in src/ and autodoc needs to import it.
sys.path.insert(0, os.path.abspath('../src'))

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'mongetools'
copyright = u'2026, the mongetools developers'
author = u'the mongetools developers'

version = '0.1'
release = '0.1'

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'mongetoolsdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'mongetools.tex', u'mongetools Documentation',
   author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'mongetools', u'mongetools Documentation',
     [author], 1)
]
