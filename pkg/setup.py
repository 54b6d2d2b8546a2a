from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("powerdom._closure", ["src/powerdom/_closure.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback in powerdom._closure_py is used instead.
    extensions = []

setup(ext_modules=extensions)
