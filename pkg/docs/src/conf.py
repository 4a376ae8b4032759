# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = "nano-continuity"
copyright = "2026, Nano Continuity Developers"
author = "Nano Continuity Developers"
release = "0.0.1"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    # Auto document packages
    "autoapi.extension",
]

autoapi_dirs = ["../../src"]

source_suffix = [".rst"]
exclude_patterns = []


# -- Options for HTML output -------------------------------------------------

html_theme = "ska_ser_sphinx_theme"
