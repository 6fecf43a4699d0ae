# Sphinx configuration for the galoiskit documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import datetime
import importlib.metadata

project = "galoiskit"
author = "tzing"
copyright = f"{datetime.date.today().year}, {author}"

release = importlib.metadata.version("galoiskit")
version = ".".join(release.split(".")[:2])


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.napoleon",
    "sphinx_design",
]

exclude_patterns = ["_build"]

# `text` renders as inline code
default_role = "code"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "click": ("https://click.palletsprojects.com/en/stable/", None),
    "pluggy": ("https://pluggy.readthedocs.io/en/stable/", None),
    "pydantic": ("https://docs.pydantic.dev/latest/", None),
}


# -- autodoc and napoleon ----------------------------------------------------

autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_default_options = {
    "exclude-members": "model_computed_fields, model_config, model_fields",
}

napoleon_google_docstring = False
napoleon_numpy_docstring = True


# -- HTML output -------------------------------------------------------------

html_title = "galoiskit"
html_theme = "shibuya"
html_theme_options = {
    "accent_color": "indigo",
    "color_mode": "light",
}
