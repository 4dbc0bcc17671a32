from setuptools import setup, find_packages
import re

VERSIONFILE = "skeptic/_version.py"
verstrline = open(VERSIONFILE, "rt").read()
VSRE = r"^__version__ = ['\"]([^'\"]*)['\"]"
mo = re.search(VSRE, verstrline, re.M)
if mo:
    verstr = mo.group(1)
else:
    raise RuntimeError(f"Unable to find version string in {VERSIONFILE}")
with open("README.md", "r") as fh:
    long_description = fh.read()


setup(
    name="skeptic",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"skeptic": ["fixtures/*.json"]},
    data_files=[("skeptic", ["README.md", "DESIGN.md"])],
    entry_points={"console_scripts": ["skeptic = skeptic.cli:main"]},
    version=verstr,
    license="MIT",
    description="Skeptical multi-label prediction under imprecise probabilities",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=["multi-label", "imprecise probabilities", "credal sets"],
)
