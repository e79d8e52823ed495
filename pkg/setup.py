from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator extension if possible, else fall back to pure Python.

    netgame.core selects the compiled engine at import time and silently uses
    the numpy implementation when the extension is absent, so a failed build
    must not abort the install.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled extension ({exc}); "
                  "netgame will use the pure-Python engine")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "netgame will use the pure-Python engine")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the compiled engine")
        return []
    ext = Extension(
        "netgame._core",
        sources=["src/netgame/_core.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(
        [ext],
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
