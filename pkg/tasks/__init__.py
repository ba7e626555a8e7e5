"""Tasks runnable through run.py; one package per command."""
