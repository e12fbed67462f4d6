# app.py - Command-line application factory
import logging
import sys
from typing import Optional, Sequence

import click

from core.config import get_config
from core.models import TOOL_VERSION, ExitCode
from .commands import register_commands


def create_cli() -> click.Group:
    """Application factory pattern"""

    @click.group()
    @click.version_option(TOOL_VERSION, prog_name="graphcode")
    @click.option("--verbose", is_flag=True, help="Log debug detail to standard error.")
    @click.option("--timing", is_flag=True, help="Add wall-clock timing to reports.")
    @click.pass_context
    def cli(ctx, verbose, timing):
        """Dense coding and teleportation over partitioned graph states."""
        get_config().init_logging(logging.DEBUG if verbose else None)
        ctx.ensure_object(dict)
        ctx.obj["timing"] = timing

    # Register all commands
    register_commands(cli)

    return cli


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the front end and return its exit code"""
    try:
        code = create_cli().main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return int(ExitCode.ERROR)
    except click.Abort:
        return int(ExitCode.ERROR)
    return int(code or ExitCode.OK)


if __name__ == "__main__":
    sys.exit(main())
