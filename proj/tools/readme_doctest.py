#!/usr/bin/env python3
"""Run the console examples in README.md and compare their output.

A ```console block holds commands prefixed with "$ " and the exact stdout
that follows them. Commands run under bash from the repository root with
the build directory first on PATH.
"""
import argparse
import difflib
import os
import pathlib
import re
import subprocess
import sys

BLOCK = re.compile(r"^```console\n(.*?)^```", re.S | re.M)


def examples(text):
    for block in BLOCK.findall(text):
        command, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if command is not None:
                    yield command, expected
                command, expected = line[2:], []
            elif command is not None:
                expected.append(line)
        if command is not None:
            yield command, expected


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--root", required=True)
    parser.add_argument("--bin-dir", required=True)
    args = parser.parse_args()

    root = pathlib.Path(args.root)
    text = (root / "README.md").read_text()
    env = dict(os.environ, PATH=args.bin_dir + os.pathsep + os.environ["PATH"])
    env.pop("GRAPHMIN_BUDGET", None)

    failures = 0
    count = 0
    commands = []
    for command, expected in examples(text):
        count += 1
        commands.append(command)
        done = subprocess.run(["bash", "-c", command], cwd=root, env=env, capture_output=True, text=True)
        actual = done.stdout.splitlines()
        if actual != expected:
            failures += 1
            print(f"FAIL: $ {command}")
            sys.stdout.writelines(
                line + "\n" for line in difflib.unified_diff(expected, actual, "README", "actual", lineterm="")
            )
            if done.stderr:
                print("stderr:", done.stderr.strip())

    # Every fixture file is exercised by some example.
    used = " ".join(commands)
    for path in sorted((root / "fixtures").rglob("*")):
        if path.is_file() and str(path.relative_to(root)) not in used:
            failures += 1
            print(f"FAIL: fixture {path.relative_to(root)} is not used by any README example")

    print(f"{count} examples, {failures} failures")
    return 1 if failures or count == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
