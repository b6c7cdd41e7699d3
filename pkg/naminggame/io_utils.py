"""
InputOutput module for handling file operations and user-facing output.
"""

import os
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO, TypeVar, Union

from tqdm import tqdm

T = TypeVar("T")
PathLike = Union[str, Path]


class OutputError(OSError):
    """Writing a result file failed."""

    def __init__(self, path: PathLike, reason: str):
        super().__init__(f"could not write {path}: {reason}")
        self.path = str(path)
        self.reason = reason


class InputOutput:
    """
    Helper class for input/output operations used by the simulator.
    Handles file reading and writing, progress display and messages.
    """

    def __init__(self,
                 stdout: TextIO = sys.stdout,
                 stderr: TextIO = sys.stderr,
                 quiet: bool = False):
        self.stdout = stdout
        self.stderr = stderr
        self.quiet = quiet

    def read_text(self, file_path: PathLike) -> Optional[str]:
        """
        Read text from a file.

        Args:
            file_path: Path to the file to read

        Returns:
            The file contents as a string, or None if the file cannot be read
        """
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                return f.read()
        except (OSError, UnicodeDecodeError) as e:
            self.tool_error(f"Failed to read {file_path}: {e}")
            return None

    def write_text(self, file_path: PathLike, content: str):
        """
        Write a result file with line-feed line endings.

        Args:
            file_path: Path to the file to write
            content: Content to write to the file

        Raises:
            OutputError: naming the path when the file cannot be written
        """
        try:
            os.makedirs(os.path.dirname(os.path.abspath(file_path)), exist_ok=True)
            with open(file_path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(content)
        except OSError as e:
            self.tool_error(f"Failed to write to {file_path}: {e}")
            raise OutputError(file_path, e.strerror or str(e)) from e
        self.tool_output(f"Wrote {file_path}")

    def progress(self, iterable: Optional[Iterable[T]] = None, total: Optional[int] = None,
                 desc: Optional[str] = None) -> tqdm:
        """Progress bar on stderr, wrapping ``iterable`` or updated by hand; silent when quiet."""
        return tqdm(iterable, total=total, desc=desc, file=self.stderr,
                    disable=self.quiet, leave=False)

    def tool_output(self, message: str):
        """Informational message on stdout, dropped when quiet."""
        if not self.quiet:
            print(message, file=self.stdout)

    def tool_error(self, message: str):
        """Error line on stderr, shown even when quiet."""
        print(f"ERROR: {message}", file=self.stderr)

    def tool_warning(self, message: str):
        print(f"WARNING: {message}", file=self.stderr)


# Quiet handler for library use; the CLI builds its own.
default_io = InputOutput(quiet=True)
