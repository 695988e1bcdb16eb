"""Output management for exported artifacts."""

import json
import shutil
import tempfile
from pathlib import Path
from typing import Callable, Optional, Union


class OutputManager:
    """Manages output file paths, collision handling and atomic writes."""

    def __init__(self, output_dir: Path, overwrite: bool = False):
        """
        Initialize output manager.

        Args:
            output_dir: Base output directory
            overwrite: Whether to overwrite existing files
        """
        self.output_dir = Path(output_dir)
        self.overwrite = overwrite
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def get_output_path(self, name: str) -> Path:
        """
        Determine the path for an artifact.

        Args:
            name: File name of the artifact, suffix included

        Returns:
            Output file path, made unique unless overwriting
        """
        output_path = self.output_dir / name
        try:
            if not self.overwrite and output_path.exists():
                output_path = self._get_unique_path(output_path)
        except OSError:
            # Existence check failed; the write reports the real error
            pass
        return output_path

    def _get_unique_path(self, path: Path) -> Path:
        """
        Generate a unique path by appending a counter.

        Args:
            path: Desired path

        Returns:
            Unique path that doesn't exist
        """
        stem = path.stem
        suffix = path.suffix
        parent = path.parent

        counter = 1
        while True:
            new_path = parent / f"{stem}_{counter}{suffix}"
            try:
                if not new_path.exists():
                    return new_path
            except OSError:
                return new_path
            counter += 1

    def write_text(self, name: str, text: str) -> Path:
        return self.write_with(name, lambda tmp: tmp.write_text(text, encoding="utf-8"))

    def write_json(self, name: str, data: Union[dict, list]) -> Path:
        return self.write_text(name, json.dumps(data, indent=2, sort_keys=True) + "\n")

    def write_with(self, name: str, writer: Callable[[Path], object]) -> Path:
        """Run writer on a temporary file next to the target, then move it into place."""
        output_path = self.get_output_path(name)
        return atomic_write(output_path, writer)


def atomic_write(output_path: Path, writer: Callable[[Path], object]) -> Path:
    """Write through a temporary file in the same directory; the target never holds a partial file."""
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    tmp_path: Optional[Path] = None
    try:
        with tempfile.NamedTemporaryFile(delete=False, suffix=output_path.suffix, dir=output_path.parent) as tmp:
            tmp_path = Path(tmp.name)
        writer(tmp_path)
        shutil.move(str(tmp_path), str(output_path))
        tmp_path = None  # Successfully moved
    finally:
        if tmp_path and tmp_path.exists():
            try:
                tmp_path.unlink()
            except OSError:
                pass
    return output_path
