# -*- coding: utf-8 -*-
#
# Sphinx configuration of the emf-coverage manual.

from datetime import datetime
import emf_coverage

project = u'emf-coverage'
copyright = u'{} emf-coverage contributors'.format(datetime.now().year)
author = u'emf-coverage contributors'
version = emf_coverage.__version__
release = emf_coverage.__version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.inheritance_diagram',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'emf-coverage'

latex_documents = [
    (master_doc, 'emf-coverage.tex', u'emf-coverage Documentation', author,
     'manual'),
]
man_pages = [
    (master_doc, 'emf-coverage', u'emf-coverage Documentation', [author], 1),
]

autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'special-members': '__init__, __call__',
    'inherited-members': True,
}

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
