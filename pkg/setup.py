from setuptools import setup, find_packages

setup(
    name="weavekit",
    version="1.0.0",
    packages=find_packages(exclude=("tests",)),
    install_requires=[
        "sympy>=1.12",
        "numpy>=1.24",
        "networkx>=3.1",
        "matplotlib>=3.7",
        "Pillow>=10.0.0",
    ],
    entry_points={
        "console_scripts": [
            "weavekit=weavekit.cli:main",
        ],
    },
    python_requires=">=3.8",
)
