import json
import os
import pytest
import shlex
import shutil
import subprocess
import sys
import tempfile


def _run(arguments, tmpdir):
    # Run the front end from a scratch directory against this checkout.
    env = os.environ.copy()
    env["PYTHONPATH"] = os.getcwd() + os.pathsep + env.get("PYTHONPATH", "")

    command = f"{sys.executable} {os.getcwd()}/bin/secsteen {arguments}"

    return subprocess.run(
        shlex.split(command),
        cwd=tmpdir,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        env=env,
        text=True,
    )


def test_eval():
    """
    Make sure that an expression is evaluated and printed in the grammar.
    """

    with tempfile.TemporaryDirectory() as tmpdir:
        process = _run("eval 'Sq^1*Sq^1'", tmpdir)

        # Make sure that the process exited successfully.
        assert process.returncode == 0

        assert process.stdout.strip() == "2*Sq(2) + Y[-1,0]"


def test_eval_json():
    """
    Make sure that the json format prints an element document.
    """

    with tempfile.TemporaryDirectory() as tmpdir:
        process = _run("eval 'Sq(1)*Sq(1)' --ring A --format json", tmpdir)

        assert process.returncode == 0

        data = json.loads(process.stdout)
        assert data["ring"] == "A"
        assert data["terms"] == []


def test_config():
    """
    Make sure that a configuration file is read from the command line.
    """

    with tempfile.TemporaryDirectory() as tmpdir:
        shutil.copyfile("tests/input/config.yaml", tmpdir + "/config.yaml")

        process = _run("verify intro --config config.yaml --format csv", tmpdir)

        # Every check passes, so the exit code is zero.
        assert process.returncode == 0

        lines = process.stdout.strip().split("\n")
        assert lines[0] == "check,ok,detail"
        assert all(",True," in line for line in lines[1:])


def test_mul():
    """
    Make sure that a product in D_1 is printed.
    """

    with tempfile.TemporaryDirectory() as tmpdir:
        process = _run("mul 'Sq(2)' u0", tmpdir)

        assert process.returncode == 0

        assert process.stdout.strip() == "I*Sq(1) + u0*Sq(2)"


@pytest.mark.parametrize(
    "arguments",
    [
        "eval 'Sq(1'",
        "eval 'Sq(0,2)' --max-deg 4",
        "verify nope",
        "eval 'Sq(1)' --config missing.yaml",
    ],
)
def test_errors(arguments):
    """
    Make sure that input errors are reported with exit code 1.
    """

    with tempfile.TemporaryDirectory() as tmpdir:
        process = _run(arguments, tmpdir)

        assert process.returncode == 1

        assert "secsteen: error:" in process.stderr
