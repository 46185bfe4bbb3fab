"""Rewrite golden/expected from the current CLI (run from the repository root)."""
import contextlib
import io
import sys

sys.path.insert(0, "tests")
from golden_cases import CASES  # noqa: E402

from valmat.cli import main  # noqa: E402

for name, argv, _ in CASES:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    with open(f"golden/expected/{name}.txt", "w", encoding="utf-8") as fh:
        fh.write(buf.getvalue())
    print(f"{name}: exit {code}")
