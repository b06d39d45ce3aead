"""Allow ``python -m yverma`` as an alias for the ``verma`` entry point."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
