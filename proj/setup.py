"""Builds the compiled core through the project's CMake tree.

The wheel metadata lives in pyproject.toml; this file only teaches setuptools
how to produce crawlbench._core (cmake configure + build, then copy the
resulting module into place). Works for editable installs too:

    pip install -e . --no-build-isolation
"""

import os
import subprocess
import sys
from glob import glob
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        config = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                f"-DCMAKE_BUILD_TYPE={config}",
                "-DCRAWLBENCH_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake", "--build", str(build_dir),
                "--target", "_core",
                "--parallel", str(os.cpu_count() or 1),
            ],
            check=True,
        )

        # the cmake tree drops the module into python/crawlbench
        produced = glob(str(build_dir / "python" / "crawlbench" / "_core*"))
        if not produced:
            raise RuntimeError("cmake build did not produce the _core module")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(produced[0], str(target))


setup(
    ext_modules=[CMakeExtension("crawlbench._core")],
    cmdclass={"build_ext": CMakeBuild},
)
