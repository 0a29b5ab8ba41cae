import setuptools

setuptools.setup(
    python_requires=">=3.8",
    name="plumbing",
    version="0.1.0",
    author="Plumbing developers",
    entry_points={
        "console_scripts": [
            "plumb = plumbing.cli:main",
        ],
    },
    install_requires=[
        "pytest",
        "pytest-cov",
        "pytest-flake8",
        "pandas",
        "tqdm==4.64.1",
        "pyyaml",
        "networkx",
        "numpy",
        "sympy",
    ],
    packages=setuptools.find_packages(
        exclude=[
            "examples",
            "examples.*",
            "docs",
            "docs.*",
        ]
    ),
    package_data={
        "plumbing": [
            "test/data/*.yaml",
            "test/data/*.json",
            "test/data/golden/*.yaml",
            "test/data/certificates/*.yaml",
        ]
    },
)
