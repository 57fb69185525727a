from setuptools import setup, find_packages

setup(
    name="lamlab",
    version="0.1.0",
    description="Untyped lambda-calculus and System F laboratory for numeral systems and storage operators",
    packages=find_packages(exclude=["tests", "examples*"]),
    install_requires=["nltk", "tqdm", "numpy", "Flask"],
    entry_points={
        "console_scripts": ["lamlab=lamlab.tools.lamlab:console_main"],
    },
)
