"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any build failure here is
tolerated rather than fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "eigenineq.specfun._kernels",
                ["src/eigenineq/specfun/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"eigenineq: skipping compiled kernels ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
