"""Allow ``python -m lcscount`` to behave like the ``lcscount`` script."""

from .cli import console_entry

if __name__ == "__main__":
    console_entry()
