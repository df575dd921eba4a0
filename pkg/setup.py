import setuptools

with open("README.md", "r") as f:
    long_description = f.read()

setuptools.setup(
    name="recolor-reconfig",
    version="0.1.0",
    description="Exact and constructive tools for list- and correspondence-colouring reconfiguration",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=[
        "git-python",
        "python-dotenv",
        "networkx",
        "numpy",
        "scipy",
        "tqdm",
        "ujson",
    ],
    entry_points={
        "console_scripts": ["recolor=recolor.cli:main"],
    },
)
