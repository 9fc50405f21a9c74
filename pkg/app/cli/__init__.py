import sys
from typing import List, Optional

from pydantic import ValidationError

from app.errors import DirectMeasurementError
from .commands import COMMANDS, build_config
from .parser import parse_args, parse_angle, parse_generator_spec


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    try:
        args = parse_args(argv)
        config = build_config(args)
        output = COMMANDS[args.command](config, args)
    except DirectMeasurementError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except ValidationError as e:
        sys.stderr.write(f"error: {e.errors()[0]['msg']}\n")
        return 1
    sys.stdout.write(output)
    return 0


__all__ = ["main", "parse_args", "parse_angle", "parse_generator_spec"]
