# File: setup.py
# Date: 2-Feb-2026
#
# Update:  14-Feb-2026 - console script entry point for scenario runs
#          28-Mar-2026 - make requirements*.txt authoritative
#
import re

from setuptools import find_packages, setup

packages = []
thisPackage = "alexlab"

# Load packages from requirements*.txt
with open("requirements.txt", "r") as ifh:
    packagesRequired = [ln.strip() for ln in ifh.readlines() if ln.strip()]

with open("requirements-test.txt", "r") as ifh:
    packagesTest = [ln.strip() for ln in ifh.readlines() if ln.strip()]

with open("requirements-doc.txt", "r") as ifh:
    packagesDoc = [ln.strip() for ln in ifh.readlines() if ln.strip()]

with open("README.md", "r") as ifh:
    longDescription = ifh.read()

with open("alexlab/__init__.py", "r") as ifh:
    version = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', ifh.read(), re.MULTILINE).group(1)

if not version:
    raise RuntimeError("Cannot find version information")

setup(
    name=thisPackage,
    version=version,
    description="Numerical checks for moving-plane symmetry and unique continuation",
    long_description=longDescription,
    long_description_content_type="text/markdown",
    author="alexlab developers",
    author_email="alexlab-dev@users.noreply.github.com",
    url="https://github.com/alexlab-dev/alexlab",
    #
    license="Apache 2.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    #
    python_requires=">=3.8",
    install_requires=packagesRequired,
    tests_require=packagesTest,
    extras_require={"all": packagesRequired + packagesTest + packagesDoc, "test": packagesTest, "docs": packagesDoc},
    #
    packages=find_packages(exclude=["alexlab.tests", "tests.*"]),
    package_data={
        # If any package contains *.md or *.txt files, include them:
        "": ["*.md", "*.txt"]
    },
    test_suite="alexlab.tests",
    #
    zip_safe=False,
    entry_points={
        "console_scripts": [
            "alexlab=alexlab.io.AlexlabExec:main",
        ]
    },
)
