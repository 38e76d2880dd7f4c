"""
Programmatic entry to the srct command: run(argv) behaves like
`python manage.py srct ...` and returns the process exit code instead of exiting.
"""
from happ.management.commands.srct import Command


def run(argv, stdout=None, stderr=None) -> int:
    command = Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv(["manage.py", "srct", *argv])
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0
