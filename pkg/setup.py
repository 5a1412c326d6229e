from setuptools import setup, find_packages

from secsteen._version import get_versions

setup(
    name="secsteen",
    version=get_versions()["version"],
    author="The secsteen developers",
    packages=find_packages(include=["secsteen", "secsteen.*"]),
    scripts=["bin/secsteen"],
    include_package_data=True,
    url="https://github.com/secsteen/secsteen",
    license="GPLv2",
    description="Exact computer algebra for the secondary Steenrod algebra",
    install_requires=["loguru", "numpy", "pyyaml", "sympy"],
    extras_require={"test": ["hypothesis", "pytest"]},
    zip_safe=False,
)
