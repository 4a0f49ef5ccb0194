import logging
import sys

from cli import cli
from core import config


def _main() -> None:
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    cli()


if __name__ == "__main__":
    _main()
