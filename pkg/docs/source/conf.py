# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))
from skeptic._version import __version__ as skeptic_version

# -- Project information -----------------------------------------------------

project = "skeptic"
copyright = "2022, the skeptic developers"
author = "the skeptic developers"

release = skeptic_version


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx_autodoc_typehints",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "myst_parser",
]

templates_path = ["_templates"]

exclude_patterns = []

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}

# session setup
default_role = "py:obj"
rst_prolog = """
.. _pydantic: https://pydantic-docs.helpmanual.io/
.. _typer: https://typer.tiangolo.com/
"""

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = ["_themes"]
html_static_path = []

# Autodoc options
autodoc_typehints = "description"
autodoc_class_signature = "separated"
autodoc_member_order = "bysource"

todo_include_todos = os.environ.get("SKEPTIC_DOCS_TODOS") is not None

# MyST options
myst_heading_anchors = 4
