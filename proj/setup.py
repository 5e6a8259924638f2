"""CMake-driven build of the symamp extension module.

The compiled `_core` module and the package sources live under python/; the
CMake configure step reuses the same tree as a plain C++ build, with tests
switched off.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        package_dir = ext_path.parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            str(source_dir),
            f"-DCMAKE_BUILD_TYPE=Release",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DSYMAMP_BUILD_TESTS=OFF",
            "-DSYMAMP_BUILD_PYTHON=ON",
        ]
        pybind11_dir = os.environ.get("PYBIND11_CMAKE_DIR")
        if pybind11_dir is None:
            try:
                pybind11_dir = subprocess.check_output(
                    [sys.executable, "-m", "pybind11", "--cmakedir"], text=True
                ).strip()
            except (OSError, subprocess.CalledProcessError):
                pybind11_dir = None
        if pybind11_dir:
            configure.append(f"-Dpybind11_DIR={pybind11_dir}")

        subprocess.check_call(configure, cwd=build_dir)
        subprocess.check_call(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            cwd=build_dir,
        )

        module_dir = build_dir / "python" / "symamp"
        package_dir.mkdir(parents=True, exist_ok=True)
        for artifact in module_dir.iterdir():
            if artifact.name.startswith("_core"):
                self.copy_file(str(artifact), str(ext_path))


setup(
    packages=["symamp"],
    package_dir={"symamp": "python/symamp"},
    ext_modules=[CMakeExtension("symamp._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
