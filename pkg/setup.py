from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the elimination kernel when possible; the package falls back
    to the pure-Python twin when the extension is absent."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"skipping compiled kernel ({exc}); using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name} ({exc}); using the pure-Python fallback")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("sullivan._elim_cy", ["src/sullivan/_elim_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
