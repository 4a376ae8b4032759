"""Command line front end and file formats."""
