# Sphinx configuration for the plumbing documentation.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

project = "plumbing"
copyright = "Plumbing developers"
author = "Plumbing developers"
release = "0.1.0"

extensions = [
    "sphinx_rtd_theme",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinxarg.ext",
]

autodoc_member_order = "bysource"
exclude_patterns = ["_build"]

html_theme = "sphinx_rtd_theme"
