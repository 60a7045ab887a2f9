import setuptools

setuptools.setup(
  name = "h2_origami",
  packages = setuptools.find_packages(include=["h2_origami"]),
  install_requires = [
    "numpy",
    "scipy",
    "sympy",
  ],
  entry_points = {
    "console_scripts": [
      "h2origami=h2_origami.cli:main",
    ],
  }
)
