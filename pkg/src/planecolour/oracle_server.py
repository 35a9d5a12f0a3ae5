"""Reference external oracle: ``python -m planecolour.oracle_server --builtin tiling7``."""

from .cli import main

if __name__ == "__main__":
    import sys

    main(["oracle", "serve", *sys.argv[1:]])
