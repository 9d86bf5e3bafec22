"""
Setup script for the lp_affine project
"""
from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="lp_affine",
    version="0.1.1",
    author="lp_affine developers",
    description="L_p affine surface areas, floating bodies and affine isoperimetric inequalities",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.21.0",
        "scipy>=1.8.0",
        "pandas>=1.5.0",
        "pyyaml>=5.4.0",
        "tqdm>=4.62.0",
    ],
    entry_points={
        "console_scripts": [
            "lp-affine=lp_affine.cli:main",
        ],
    },
)
