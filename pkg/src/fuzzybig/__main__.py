"""Module entry point: python -m fuzzybig ..."""

from .cli import main

main()
