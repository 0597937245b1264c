# -*- coding: utf-8 -*-
#
# pyTTEI documentation build configuration file
#
# run ``make html`` or ``sphinx-build -b html source build/html`` from
# ``doc/``

import sys, os

# the package is imported from the source tree
sys.path.insert(0, os.path.abspath('../.'))
sys.path.insert(0, os.path.abspath('../../.'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest',
              'sphinx.ext.coverage', 'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyTTEI'
copyright = u'2026, the pyTTEI developers'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'pyTTEIdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'pyTTEI.tex', u'pyTTEI Documentation',
   u'the pyTTEI developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'pyttei', u'pyTTEI Documentation',
     [u'the pyTTEI developers'], 1)
]
